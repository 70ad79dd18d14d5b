from actions.enumeration import expand_binomial
from utils.error import InvalidArgument
from utils.words import parse_int, parse_word


def controller_expand(data):
    try:
        u = parse_word(data['u'])
        n = parse_int(data['len'], 'len')
    except KeyError as e:
        raise InvalidArgument(f"The field '{e.args[0]}' has not been sent")
    method = data.get('method', 'shapes')

    poly = expand_binomial(u, n, method)
    return {
        "u": list(u),
        "len": n,
        "coefficients": list(poly.coefficients),
        "expansion": str(poly),
    }
