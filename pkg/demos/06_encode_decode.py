"""Encoding and decoding with a constructed codebook."""
# %%
import json

from boundedones import CodeBook, build_from_lengths, decode, encode
from boundedones.core import DecodeError

book = build_from_lengths([4, 2, 3, 4, 3, 3, 3], D=2)
labels = tuple(f"s{i}" for i in range(1, 8))
book = CodeBook(book.codewords, book.mode, book.D, labels)

bits = encode(book, [1, 6])
print("s2 s7 ->", bits)
print(bits, "->", [book.label(s) for s in decode(book, bits)])

# %% Codebooks serialise to the same JSON the command line reads.
text = json.dumps(book.to_dict())
again = CodeBook.from_dict(json.loads(text))
print(again.codewords == book.codewords)

# %% Truncated input is reported with its position.
try:
    decode(CodeBook(("00", "01", "1")), "0")
except DecodeError as exc:
    print(exc, "offset", exc.offset)
