from actions.rsk import p_tableau
from actions.tableau import row_word
from utils.error import InvalidArgument
from utils.words import format_tableau, parse_word


def controller_ptab(data):
    try:
        word = parse_word(data['word'])
    except KeyError as e:
        raise InvalidArgument(f"The field '{e.args[0]}' has not been sent")

    tableau = p_tableau(word)
    return {
        "word": list(word),
        "tableau": [list(row) for row in tableau.rows],
        "shape": list(tableau.shape),
        "row_word": list(row_word(tableau)),
        "text": format_tableau(tableau),
    }
