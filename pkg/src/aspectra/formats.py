"""Graph ingestion: graph6, edge lists and a small builder-expression language."""

from __future__ import annotations

import re
from pathlib import Path
from typing import Iterator

from . import graph as gr
from .graph import FamilySpec, Graph

HEADER = ">>graph6<<"


class ParseError(ValueError):
    def __init__(self, message: str, offset: int | None = None):
        where = f" at offset {offset}" if offset is not None else ""
        super().__init__(f"{message}{where}")
        self.offset = offset


def _encode_n(n: int) -> str:
    if n < 0:
        raise ValueError("negative order")
    if n <= 62:
        return chr(63 + n)
    if n <= 258047:
        return "~" + "".join(chr(63 + ((n >> sh) & 63)) for sh in (12, 6, 0))
    if n <= 68719476735:
        return "~~" + "".join(chr(63 + ((n >> sh) & 63)) for sh in (30, 24, 18, 12, 6, 0))
    raise ValueError(f"order {n} too large for graph6")


def encode_graph6(g: Graph) -> str:
    n = g.order
    bits = []
    for j in range(1, n):
        mj = g.masks[j]
        for i in range(j):
            bits.append((mj >> i) & 1)
    bits.extend([0] * (-len(bits) % 6))
    chars = []
    for k in range(0, len(bits), 6):
        v = 0
        for b in bits[k:k + 6]:
            v = (v << 1) | b
        chars.append(chr(63 + v))
    return _encode_n(n) + "".join(chars)


def parse_graph6(line: str) -> Graph:
    """Decode one graph6 line (optionally prefixed by the ``>>graph6<<`` header)."""
    text = line.strip()
    base = 0
    if text.startswith(HEADER):
        text = text[len(HEADER):]
        base = len(HEADER)
    if not text:
        raise ParseError("empty graph6 string", base)
    for i, ch in enumerate(text):
        if not 63 <= ord(ch) <= 126:
            raise ParseError(f"character {ch!r} outside the graph6 range", base + i)
    vals = [ord(ch) - 63 for ch in text]
    if vals[0] != 63:
        n, pos = vals[0], 1
    elif len(vals) >= 2 and vals[1] == 63:
        if len(vals) < 8:
            raise ParseError("truncated 8-byte order field", base + len(vals))
        n = 0
        for v in vals[2:8]:
            n = (n << 6) | v
        pos = 8
    else:
        if len(vals) < 4:
            raise ParseError("truncated 4-byte order field", base + len(vals))
        n = (vals[1] << 12) | (vals[2] << 6) | vals[3]
        pos = 4
    nbits = n * (n - 1) // 2
    need = (nbits + 5) // 6
    body = vals[pos:]
    if len(body) != need:
        raise ParseError(f"expected {need} data bytes for order {n}, found {len(body)}", base + pos)
    masks = [0] * n
    k = 0
    for j in range(1, n):
        for i in range(j):
            byte, bit = divmod(k, 6)
            if (body[byte] >> (5 - bit)) & 1:
                masks[i] |= 1 << j
                masks[j] |= 1 << i
            k += 1
    pad = need * 6 - nbits
    if pad and body[-1] & ((1 << pad) - 1):
        raise ParseError("non-zero padding bits", base + pos + need - 1)
    return Graph.from_masks(masks)


def read_graph6_stream(path: str | Path) -> Iterator[Graph]:
    with open(path) as fh:
        for line in fh:
            line = line.strip()
            if line:
                yield parse_graph6(line)


def parse_edge_list(text: str) -> Graph:
    """``u v`` per line, 0-indexed; blank lines and ``#`` comments ignored.

    A line holding a single integer fixes the order (useful for isolated vertices).
    """
    edges = []
    order = 0
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        toks = line.split()
        try:
            nums = [int(tok) for tok in toks]
        except ValueError:
            raise ParseError(f"non-integer token on line {lineno}: {raw!r}") from None
        if len(nums) == 1:
            order = max(order, nums[0])
            continue
        if len(nums) != 2 or min(nums) < 0:
            raise ParseError(f"expected 'u v' on line {lineno}: {raw!r}")
        u, v = nums
        edges.append((u, v))
        order = max(order, u + 1, v + 1)
    return Graph(order, edges)


class _BuilderParser:
    _atoms = {"K": gr.complete, "P": gr.path, "C": gr.cycle, "S": gr.star, "E": gr.empty}

    def __init__(self, text: str):
        self.text = text
        self.pos = 0

    def error(self, msg: str):
        raise ParseError(msg, self.pos)

    def skip(self):
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    def expect(self, ch: str):
        self.skip()
        if self.pos >= len(self.text) or self.text[self.pos] != ch:
            self.error(f"expected {ch!r}")
        self.pos += 1

    def integer(self) -> int:
        self.skip()
        m = re.match(r"\d+", self.text[self.pos:])
        if not m:
            self.error("expected an integer")
        self.pos += m.end()
        return int(m.group())

    def name(self) -> str:
        self.skip()
        m = re.match(r"[A-Za-z][A-Za-z0-9]*?(?=\d|\(|$|\s|,|\))", self.text[self.pos:])
        if not m:
            self.error("expected a graph expression")
        self.pos += m.end()
        return m.group()

    def expr(self) -> Graph:
        start = self.pos
        word = self.name()
        try:
            if word in self._atoms:
                return self._atoms[word](self.integer())
            if word in ("join", "union"):
                self.expect("(")
                left = self.expr()
                self.expect(",")
                right = self.expr()
                self.expect(")")
                return gr.join(left, right) if word == "join" else gr.disjoint_union(left, right)
            if word == "copies":
                self.expect("(")
                k = self.integer()
                self.expect(",")
                inner = self.expr()
                self.expect(")")
                return gr.copies(k, inner)
            if word == "G":
                # G1(n, s)
                if self.integer() != 1:
                    self.pos = start
                    self.error("unknown builder")
                self.expect("(")
                nn = self.integer()
                self.expect(",")
                ss = self.integer()
                self.expect(")")
                return gr.extremal_g1(FamilySpec(nn, ss))
            if word == "Gstar":
                self.expect("(")
                nn = self.integer()
                self.expect(")")
                return gr.exception_graph(nn)
        except ParseError:
            raise
        except ValueError as exc:
            raise ParseError(str(exc), start) from None
        self.pos = start
        self.error(f"unknown builder {word!r}")

    def parse(self) -> Graph:
        g = self.expr()
        self.skip()
        if self.pos != len(self.text):
            self.error("trailing input")
        return g


def parse_builder(text: str) -> Graph:
    """Evaluate expressions such as ``join(K1,union(K23,E1))`` or ``G1(25,3)``."""
    return _BuilderParser(text).parse()


def read_graph(spec: str) -> Graph:
    """Builder expression, ``@file`` edge list, or a graph6 string, tried in that order."""
    spec = spec.strip()
    if spec.startswith("@"):
        return parse_edge_list(Path(spec[1:]).read_text())
    try:
        return parse_builder(spec)
    except ParseError as builder_error:
        try:
            return parse_graph6(spec)
        except ParseError:
            raise builder_error from None
