"""Unicode text normalization shared by phonemization and transcript scoring."""

import unicodedata


def normalize_text(s: str) -> str:
    """NFC-normalize, drop punctuation codepoints, lowercase, collapse whitespace.

    Every codepoint in a Unicode punctuation category (P*) is removed outright,
    not replaced by a space. Whitespace runs collapse to a single ASCII space
    and the result is trimmed.
    """
    s = unicodedata.normalize("NFC", s)
    s = "".join(ch for ch in s if not unicodedata.category(ch).startswith("P"))
    s = s.lower()
    return " ".join(s.split())
