#!/usr/bin/env python3
"""Build data/lexicon/english.txt.

Base list: the public-domain web2 word list (Webster's Second International, 1934)
as shipped in the MIT-licensed `english-words` package (2.0.2, web2_alpha_lower).
Regular inflections are derived for 2-10 letter words because web2 lists lemmas
only, and scripts/lexicon_supplement.txt adds modern and chat vocabulary.

    pip download english-words==2.0.2 --no-deps -d /tmp/ew
    python3 scripts/build_lexicon.py /tmp/ew/english_words-2.0.2-py3-none-any.whl
"""
import pickle
import sys
import zipfile
from pathlib import Path

ROOT = Path(__file__).resolve().parent.parent
VOWELS = set("aeiou")


def load_base(wheel: Path) -> set[str]:
    with zipfile.ZipFile(wheel) as zf:
        data = pickle.loads(zf.read("english_words/data/web2_alpha_lower.pickle"))
    return {w for w in data if w.isascii() and w.isalpha()}


def inflections(word: str) -> list[str]:
    if not 2 <= len(word) <= 10:
        return []
    out = []
    if word.endswith(("s", "x", "z", "ch", "sh")):
        out.append(word + "es")
    elif word.endswith("y") and word[-2] not in VOWELS:
        out += [word[:-1] + "ies", word[:-1] + "ied"]
    else:
        out.append(word + "s")
    if word.endswith("e"):
        out += [word + "d", word[:-1] + "ing"]
    else:
        out += [word + "ed", word + "ing"]
    return out


def main() -> None:
    base = load_base(Path(sys.argv[1]))
    words = set(base)
    for w in base:
        words.update(inflections(w))
    for line in (ROOT / "scripts" / "lexicon_supplement.txt").read_text().splitlines():
        line = line.strip()
        if line and not line.startswith("#"):
            words.add(line.lower())
    words = {w for w in words if len(w) > 1 or w in ("a", "i")}
    out = ROOT / "data" / "lexicon" / "english.txt"
    out.parent.mkdir(parents=True, exist_ok=True)
    out.write_text("\n".join(sorted(words)) + "\n")
    print(f"{len(words)} words -> {out}")


if __name__ == "__main__":
    main()
