from actions.harness import SweepConfig, run_conjecture
from utils.error import InvalidArgument
from utils.words import parse_int, parse_word

# Optional range fields and their minimum values
RANGE_FIELDS = {
    'u_alphabet': 1,
    'u_length': 1,
    'u_sum': 2,
    'w_alphabet': 1,
    'w_length': 1,
    'k_bound': 1,
    'n_max': 1,
    'shards': 1,
    'workers': 1,
    'budget': 1,
}


def controller_conjecture(data):
    """
    Ejecuta un barrido de conjetura y devuelve el informe como diccionario.

    Campos: ``conjecture`` (obligatorio), ``u`` y ``m`` según la conjetura, los
    rangos de RANGE_FIELDS y ``timing`` (false fija elapsed_ms a 0).
    """
    try:
        conjecture = data['conjecture']
    except KeyError as e:
        raise InvalidArgument(f"The field '{e.args[0]}' has not been sent")

    ranges = {
        name: parse_int(data[name], name, minimum)
        for name, minimum in RANGE_FIELDS.items()
        if data.get(name) is not None
    }
    cfg = SweepConfig(conjecture, **ranges)
    u = parse_word(data['u']) if data.get('u') is not None else None
    m = parse_int(data['m'], 'm', 1) if data.get('m') is not None else None

    report = run_conjecture(cfg, u, m)
    return report.to_dict(timing=bool(data.get('timing', True)))
