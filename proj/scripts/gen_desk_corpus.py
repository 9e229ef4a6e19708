#!/usr/bin/env python3
"""Generate the 50/50 screening benchmark in data/desk/.

Each language gets 50 held-out sentences (desk_sentences_{en,ko}.txt, never used
for training) and 50 generated gibberish responses:

  mash      random walk over neighbouring keys; Korean keys go through the
            2-set (dubeolsik) layout and a simple IME composer
  repeat    one character or a short random key pattern repeated
  symbols   punctuation and digits with the odd stray letter

Candidates that the bundled whitelist would accept (for example "hahaha" or
"ㅋㅋㅋ") are skipped, since those are legitimate replies. Output is fully
determined by SEED.

    python3 scripts/gen_desk_corpus.py
"""
import json
import random
import string
from pathlib import Path

SEED = 20240917
ROOT = Path(__file__).resolve().parent.parent
PER_CLASS = 50

ROWS = ["qwertyuiop", "asdfghjkl", "zxcvbnm"]
DUBEOLSIK = dict(zip(
    "qwertyuiopasdfghjklzxcvbnm",
    "ㅂㅈㄷㄱㅅㅛㅕㅑㅐㅔㅁㄴㅇㄹㅎㅗㅓㅏㅣㅋㅌㅊㅍㅠㅜㅡ"))
INITIALS = "ㄱㄲㄴㄷㄸㄹㅁㅂㅃㅅㅆㅇㅈㅉㅊㅋㅌㅍㅎ"
MEDIALS = "ㅏㅐㅑㅒㅓㅔㅕㅖㅗㅘㅙㅚㅛㅜㅝㅞㅟㅠㅡㅢㅣ"
FINALS = ["", "ㄱ", "ㄲ", "ㄳ", "ㄴ", "ㄵ", "ㄶ", "ㄷ", "ㄹ", "ㄺ", "ㄻ", "ㄼ", "ㄽ", "ㄾ", "ㄿ", "ㅀ",
          "ㅁ", "ㅂ", "ㅄ", "ㅅ", "ㅆ", "ㅇ", "ㅈ", "ㅊ", "ㅋ", "ㅌ", "ㅍ", "ㅎ"]

QUESTIONS = {
    "english": [
        "What did you like most about your stay?",
        "How would you describe the food?",
        "Why did you choose this product?",
        "What could we improve next time?",
        "How was the service during your visit?",
    ],
    "korean": [
        "이번 숙박에서 가장 좋았던 점은 무엇인가요?",
        "음식은 어떠셨나요?",
        "이 제품을 선택한 이유는 무엇인가요?",
        "다음에 개선했으면 하는 점이 있나요?",
        "방문하셨을 때 서비스는 어땠나요?",
    ],
}


def neighbours(key):
    for r, row in enumerate(ROWS):
        c = row.find(key)
        if c < 0:
            continue
        out = []
        for dr in (-1, 0, 1):
            rr = r + dr
            if 0 <= rr < len(ROWS):
                for dc in (-1, 0, 1):
                    cc = c + dc
                    if (dr or dc) and 0 <= cc < len(ROWS[rr]):
                        out.append(ROWS[rr][cc])
        return out
    return []


def key_walk(rng, length):
    key = rng.choice("".join(ROWS))
    keys = [key]
    while len(keys) < length:
        key = rng.choice(neighbours(key)) if rng.random() < 0.75 else rng.choice("".join(ROWS))
        keys.append(key)
    return keys


def compose(jamo):
    """Greedy 2-set IME: C V [C] syllables; no compound vowels or clusters."""
    out = []
    cho = jung = jong = None

    def flush():
        nonlocal cho, jung, jong
        if cho and jung:
            idx = (INITIALS.index(cho) * 21 + MEDIALS.index(jung)) * 28 + (FINALS.index(jong) if jong else 0)
            out.append(chr(0xAC00 + idx))
        elif cho:
            out.append(cho)
        cho = jung = jong = None

    for j in jamo:
        if j in MEDIALS:
            if cho and not jung:
                jung = j
            elif cho and jung and jong:
                carry = jong
                jong = None
                flush()
                cho, jung = carry, j
            else:
                flush()
                out.append(j)
        else:
            if cho and jung and not jong and j in FINALS:
                jong = j
            else:
                flush()
                cho = j
    flush()
    return "".join(out)


def mash(rng, lang):
    words = []
    for _ in range(rng.choice([1, 1, 1, 2, 3])):
        keys = key_walk(rng, rng.randint(4, 12))
        words.append("".join(keys) if lang == "english" else compose(DUBEOLSIK[k] for k in keys))
    return " ".join(words)


def repeat(rng, lang):
    alphabet = string.ascii_lowercase if lang == "english" else INITIALS[:] + MEDIALS[:] + "가나다라마바사하"
    if rng.random() < 0.5:
        return rng.choice(alphabet) * rng.randint(5, 16)
    unit = "".join(rng.choice(alphabet) for _ in range(rng.randint(2, 3)))
    return unit * rng.randint(3, 6)


def symbols(rng, lang):
    pool = "!@#$%^&*()_+-=[]{};:,./<>?~0123456789"
    text = "".join(rng.choice(pool) for _ in range(rng.randint(4, 14)))
    if rng.random() < 0.4:
        stray = rng.choice(string.ascii_lowercase) if lang == "english" else rng.choice(INITIALS)
        pos = rng.randrange(len(text))
        text = text[:pos] + stray + text[pos:]
    return text


def load_whitelist(lang):
    entries = []
    for line in (ROOT / "data" / "whitelist" / f"{lang}.txt").read_text(encoding="utf-8").splitlines():
        if line and not line.startswith("#"):
            entries.append(canonical(line))
    return [e for e in entries if e]


def canonical(text):
    kept = "".join(ch.lower() if ch.isascii() else ch for ch in text if not (ch.isascii() and ch in string.punctuation))
    return " ".join(kept.split())


def whitelisted(text, entries):
    c = canonical(text)
    compact = c.replace(" ", "")
    for e in entries:
        if c == e:
            return True
        if c.startswith(e) and len(c) > len(e) and set(c[len(e):]) == {e[-1]}:
            return True
        for t in (c, compact):
            if len(t) > len(e) and len(t) % len(e) == 0 and t == e * (len(t) // len(e)):
                return True
    return False


def build(lang, code, rng):
    sentences = (ROOT / "scripts" / f"desk_sentences_{code}.txt").read_text(encoding="utf-8").splitlines()
    sentences = [s for s in sentences if s.strip()][:PER_CLASS]
    entries = load_whitelist(lang)
    generators = [mash, repeat, symbols]
    gibberish = []
    while len(gibberish) < PER_CLASS:
        gen = generators[len(gibberish) % len(generators)]
        text = gen(rng, lang)
        if text.strip() and not whitelisted(text, entries) and text not in gibberish:
            gibberish.append((gen.__name__, text))
    rows = [(s, False, "sentence") for s in sentences] + [(t, True, g) for g, t in gibberish]
    rng.shuffle(rows)
    out = []
    for i, (text, is_gib, source) in enumerate(rows, 1):
        out.append({
            "id": f"{code}-desk-{i:03d}",
            "question": rng.choice(QUESTIONS[lang]),
            "response": text,
            "language": lang,
            "gibberish": is_gib,
            "source": source,
        })
    return out


def main():
    rng = random.Random(SEED)
    out_dir = ROOT / "data" / "desk"
    out_dir.mkdir(parents=True, exist_ok=True)
    for lang, code in (("english", "en"), ("korean", "ko")):
        rows = build(lang, code, rng)
        path = out_dir / f"{lang}.jsonl"
        with path.open("w", encoding="utf-8") as f:
            for row in rows:
                f.write(json.dumps(row, ensure_ascii=False) + "\n")
        print(f"{len(rows)} items -> {path}")


if __name__ == "__main__":
    main()
