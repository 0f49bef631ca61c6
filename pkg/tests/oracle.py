"""Literal reference interpreter for dual-use character detection.

This is a deliberately naive character-rewriting interpreter of the
detection procedure, kept independent of the packaged implementation so
the two can be checked against each other.  It walks the word once per
target character, replacing each occurrence with its Latin vowel or
consonant form in place; the second pass therefore sees the first pass's
choices when it tests neighbours for vowelhood.
"""

VOWELS = ["i", "î", "u", "û", "ە", "ا", "ۆ", "ێ"]
HAMZA = "ئ"
FORMS = {"و": ("u", "w"), "ی": ("î", "y")}


def detect_target_char(w, target_char):
    """One rewriting pass for a single target character.

    `w` is a list of characters; a new list is returned.  Hamza is left
    in place here (resolve removes it once, after both passes).
    """
    target_char_vowel, target_char_consonant = FORMS[target_char]
    length = len(w)
    if "".join(w) == target_char:
        return [target_char_consonant]
    w = list(w)
    index = 0
    while index < length:
        if w[index] == HAMZA and index + 1 < length and w[index + 1] == target_char:
            w[index + 1] = target_char_vowel
            index = index + 1
        else:
            if w[index] == target_char:
                if index == 0:
                    w[index] = target_char_consonant
                else:
                    if w[index - 1] in VOWELS:
                        w[index] = target_char_consonant
                    else:
                        if index + 1 < length:
                            if w[index + 1] in VOWELS:
                                w[index] = target_char_consonant
                            else:
                                w[index] = target_char_vowel
                        else:
                            w[index] = target_char_vowel
        index = index + 1
    return w


def resolve(word):
    """Run the detection for both target characters, ی first, then و.

    Returns the word with every dual-use character replaced by its Latin
    reading and Hamza removed.
    """
    w = list(word)
    for target_char in ("ی", "و"):
        w = detect_target_char(w, target_char)
    return "".join(c for c in w if c != HAMZA)
