from actions.enumeration import count_by_shapes, count_centralizer, family_of
from utils.error import InvalidArgument
from utils.words import parse_int, parse_word

COUNT_METHODS = ("brute", "shapes")


def controller_count(data):
    try:
        u = parse_word(data['u'])
        n = parse_int(data['len'], 'len')
        m = parse_int(data['max'], 'max', 1)
    except KeyError as e:
        raise InvalidArgument(f"The field '{e.args[0]}' has not been sent")
    method = data.get('method', 'brute')
    if method not in COUNT_METHODS:
        raise InvalidArgument(f"The field 'method' must be one of {', '.join(COUNT_METHODS)}")
    workers = parse_int(data.get('workers', 1), 'workers', 1)

    if method == "shapes":
        count = count_by_shapes(family_of(u), n, m)
    else:
        count = count_centralizer(u, n, m, workers)
    return {"u": list(u), "len": n, "max": m, "method": method, "count": count}
