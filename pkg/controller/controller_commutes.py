from actions.centralizer import in_centralizer
from utils.error import InvalidArgument
from utils.words import parse_word


def controller_commutes(data):
    try:
        u = parse_word(data['u'])
        w = parse_word(data['w'])
    except KeyError as e:
        raise InvalidArgument(f"The field '{e.args[0]}' has not been sent")

    return {"u": list(u), "w": list(w), "commutes": in_centralizer(u, w)}
