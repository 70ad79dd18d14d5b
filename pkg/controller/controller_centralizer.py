import inspect
import logging
from actions.centralizer import centralizer_words
from utils.error import InvalidArgument
from utils.words import format_word, parse_int, parse_word


def controller_centralizer(data):
    try:
        u = parse_word(data['u'])
        n = parse_int(data['len'], 'len')
        m = parse_int(data['max'], 'max', 1)
    except KeyError as e:
        raise InvalidArgument(f"The field '{e.args[0]}' has not been sent")
    workers = parse_int(data.get('workers', 1), 'workers', 1)

    logging.info(f"START || {inspect.currentframe().f_code.co_name}")
    members = centralizer_words(u, n, m, workers)
    return {
        "u": list(u),
        "len": n,
        "max": m,
        "count": len(members),
        "words": [format_word(w) for w in members],
    }
