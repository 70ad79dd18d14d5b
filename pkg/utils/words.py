import re
from utils.error import InvalidArgument

# Canonical text forms used by the CLI, the HTTP API and the golden fixtures:
#   word     -> "2,1,2"  (a bare digit string such as "212" is accepted as input)
#   tableau  -> "[1,2]\n[2]"

WORD_PATTERN = re.compile(r"^\d+(,\d+)*$")


def parse_word(text):
    if text is None:
        raise InvalidArgument("A word was expected")
    if isinstance(text, (list, tuple)):
        if not all(isinstance(x, int) and not isinstance(x, bool) for x in text):
            raise InvalidArgument(f"Letters must be integers, got {list(text)!r}")
        letters = tuple(text)
    else:
        text = str(text).strip().replace(" ", "")
        if text in ("", "-", "()"):
            return ()
        if not WORD_PATTERN.match(text):
            raise InvalidArgument(f"Malformed word '{text}'")
        if "," in text or "0" in text:
            # A zero can only belong to a letter >= 10, so no shorthand
            letters = tuple(int(x) for x in text.split(","))
        else:
            # Shorthand: every character is one letter
            letters = tuple(int(x) for x in text)
    if any(x < 1 for x in letters):
        raise InvalidArgument(f"Letters must be positive integers, got {letters}")
    return letters


def format_word(word):
    return ",".join(str(x) for x in word)


def format_tableau(tableau):
    return "\n".join("[" + ",".join(str(x) for x in row) + "]" for row in tableau.rows)


def parse_int(value, name, minimum=0):
    try:
        number = int(value)
    except (TypeError, ValueError):
        raise InvalidArgument(f"The field '{name}' must be an integer, got {value!r}")
    if isinstance(value, bool) or number != value and not isinstance(value, str):
        raise InvalidArgument(f"The field '{name}' must be an integer, got {value!r}")
    if number < minimum:
        raise InvalidArgument(f"The field '{name}' must be at least {minimum}, got {number}")
    return number
