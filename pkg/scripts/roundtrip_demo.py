#!/usr/bin/env python3
"""Encipher a message, hide it with each method, then recover it."""

import random
import sys
from importlib import resources

from textsteg import missing_letter, otp, paragraph, wordlist
from textsteg.dictionary import sample_dictionary

message = (sys.argv[1] if len(sys.argv) > 1 else "Hello World!").encode("utf-8")
rng = random.Random(42)
words = sample_dictionary()
cover = resources.files("textsteg.data").joinpath("corpus.txt").read_text(encoding="utf-8")

cipher, key = otp.encipher(message, rng)
print("cipher units:", cipher)

for name, hide, seek in (
    ("missing-letter", lambda c: missing_letter.hide(c, words, rng), missing_letter.seek),
    ("wordlist", lambda c: wordlist.hide(c, words, rng), wordlist.seek),
    ("paragraph", lambda c: paragraph.hide(c, cover), paragraph.seek),
):
    bundle = hide(cipher)
    recovered = otp.decipher(seek(bundle.stego_text, bundle.stego_key), key)
    print(f"\n== {name}: capacity {bundle.stats.capacity_percent:.2f}%")
    if name != "paragraph":
        print(bundle.stego_text, end="")
    print("stego key:", bundle.stego_key if name != "paragraph" else bundle.stego_key[:48] + "...")
    print("recovered:", recovered.decode("utf-8", errors="replace"))
