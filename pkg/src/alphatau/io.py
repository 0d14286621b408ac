"""Text formats: trigraph JSON, edge lists and graph6."""

from __future__ import annotations

import json
import re
from itertools import combinations
from pathlib import Path

from .core import Graph, Trigraph, canon_pair


class ParseError(ValueError):
    """Malformed input; ``line`` is 1-based (0 when unknown)."""

    def __init__(self, message: str, line: int = 0):
        self.line = line
        super().__init__(f"line {line}: {message}" if line else message)


# graph6 -------------------------------------------------------------------

def pair_order(n: int):
    """Upper-triangle pairs read column by column: (0,1),(0,2),(1,2),(0,3),..."""
    for j in range(1, n):
        for i in range(j):
            yield i, j


def write_graph6(g: Graph) -> str:
    if g.n > 62:
        raise ValueError("graph6 writer supports n <= 62")
    bits = [1 if (i, j) in g.edges else 0 for i, j in pair_order(g.n)]
    bits += [0] * (-len(bits) % 6)
    out = [chr(63 + g.n)]
    for k in range(0, len(bits), 6):
        val = 0
        for b in bits[k:k + 6]:
            val = val << 1 | b
        out.append(chr(63 + val))
    return "".join(out)


def parse_graph6(text: str) -> Graph:
    s = text.strip()
    if s.startswith(">>graph6<<"):
        s = s[len(">>graph6<<"):]
    if not s:
        raise ParseError("empty graph6 string")
    for ch in s:
        if not 63 <= ord(ch) <= 126:
            raise ParseError(f"byte {ord(ch)} outside 63..126 in graph6 string")
    n = ord(s[0]) - 63
    if n > 62:
        raise ParseError("graph6 strings with n > 62 are not supported")
    nbits = n * (n - 1) // 2
    ngroups = -(-nbits // 6)
    body = s[1:]
    if len(body) < ngroups:
        raise ParseError(f"truncated graph6 string: need {ngroups} data bytes, got {len(body)}")
    if len(body) > ngroups:
        raise ParseError(f"trailing bytes in graph6 string: expected {ngroups} data bytes")
    bits = []
    for ch in body:
        v = ord(ch) - 63
        bits.extend((v >> (5 - k)) & 1 for k in range(6))
    if any(bits[nbits:]):
        raise ParseError("nonzero padding bits in graph6 string")
    edges = frozenset(p for p, b in zip(pair_order(n), bits) if b)
    return Graph(n, edges)


def read_graph6_file(path) -> list[Graph]:
    out = []
    for lineno, line in enumerate(Path(path).read_text().splitlines(), 1):
        if not line.strip():
            continue
        try:
            out.append(parse_graph6(line))
        except ParseError as exc:
            raise ParseError(str(exc), lineno) from None
    return out


# edge lists ----------------------------------------------------------------

def parse_edgelist(text: str) -> Graph:
    """First line ``n m``, then ``m`` lines ``u v``."""
    lines = text.splitlines()
    rows = [(i, ln.split()) for i, ln in enumerate(lines, 1) if ln.strip()]
    if not rows:
        raise ParseError("empty edge list", 1)
    lineno, head = rows[0]
    n, m = _ints(head, 2, lineno)
    if n < 0 or m < 0:
        raise ParseError("n and m must be non-negative", lineno)
    if len(rows) - 1 != m:
        where = rows[m + 1][0] if len(rows) - 1 > m else lineno
        raise ParseError(f"header declares {m} edges, found {len(rows) - 1}", where)
    edges = set()
    for lineno, parts in rows[1:]:
        u, v = _ints(parts, 2, lineno)
        if not (0 <= u < n and 0 <= v < n):
            raise ParseError(f"vertex id out of range 0..{n - 1}", lineno)
        if u == v:
            raise ParseError(f"self-loop at vertex {u}", lineno)
        p = canon_pair(u, v)
        if p in edges:
            raise ParseError(f"duplicate edge {p}", lineno)
        edges.add(p)
    return Graph(n, frozenset(edges))


def write_edgelist(g: Graph) -> str:
    lines = [f"{g.n} {g.m}"] + [f"{u} {v}" for u, v in g.sorted_edges]
    return "\n".join(lines) + "\n"


def _ints(parts, k, lineno):
    if len(parts) != k:
        raise ParseError(f"expected {k} integers, got {len(parts)} fields", lineno)
    try:
        return [int(p) for p in parts]
    except ValueError:
        raise ParseError(f"non-integer field in {' '.join(parts)!r}", lineno) from None


# trigraph JSON ------------------------------------------------------------

_PAIR_RE = re.compile(r"\[\s*(-?\d+)\s*,\s*(-?\d+)\s*\]")


def _pair_line(text: str, key: str, index: int) -> int:
    """Best-effort line number of the index-th pair listed under ``key``."""
    m = re.search(r'"%s"\s*:\s*\[' % key, text)
    if not m:
        return 0
    for k, pm in enumerate(_PAIR_RE.finditer(text, m.end())):
        if k == index:
            return text.count("\n", 0, pm.start()) + 1
    return text.count("\n", 0, m.start()) + 1


def _key_line(text: str, key: str) -> int:
    m = re.search(r'"%s"' % key, text)
    return text.count("\n", 0, m.start()) + 1 if m else 0


def parse_trigraph_json(text: str) -> Trigraph:
    """Strict parser for ``{"n": int, "C": [[u,v],...], "S": [[u,v],...]}``.

    Pairs must satisfy ``0 <= u < v < n`` and appear at most once per list.
    The trigraph axioms are not checked here; see :func:`core.validate`.
    """
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(exc.msg, exc.lineno) from None
    if not isinstance(obj, dict):
        raise ParseError("top-level value must be an object", 1)
    extra = set(obj) - {"n", "C", "S"}
    if extra:
        key = sorted(extra)[0]
        raise ParseError(f"unknown key {key!r}", _key_line(text, key))
    for key in ("n", "C", "S"):
        if key not in obj:
            raise ParseError(f"missing key {key!r}", 1)
    n = obj["n"]
    if type(n) is not int or n < 0:
        raise ParseError("'n' must be a non-negative integer", _key_line(text, "n"))
    rels = {}
    for key in ("C", "S"):
        items = obj[key]
        if not isinstance(items, list):
            raise ParseError(f"{key!r} must be a list of pairs", _key_line(text, key))
        seen = set()
        for i, pair in enumerate(items):
            line = _pair_line(text, key, i)
            if (not isinstance(pair, list) or len(pair) != 2
                    or any(type(x) is not int for x in pair)):
                raise ParseError(f"{key}[{i}] must be a pair of integers", line)
            u, v = pair
            if not 0 <= u < v < n:
                raise ParseError(f"{key}[{i}] = {pair} violates 0 <= u < v < n", line)
            if (u, v) in seen:
                raise ParseError(f"duplicate pair {pair} in {key!r}", line)
            seen.add((u, v))
        rels[key] = frozenset(seen)
    return Trigraph(n, rels["C"], rels["S"])


def trigraph_to_obj(t: Trigraph) -> dict:
    return {"n": t.n, "C": [list(p) for p in sorted(t.C)], "S": [list(p) for p in sorted(t.S)]}


def write_trigraph_json(t: Trigraph) -> str:
    return json.dumps(trigraph_to_obj(t))


def trigraph_code(t: Trigraph) -> str:
    """Compact id: ``n:`` followed by one of C/S/N per pair in graph6 order."""
    labels = "".join(
        "S" if p in t.S else "C" if p in t.C else "N" for p in pair_order(t.n)
    )
    return f"{t.n}:{labels}"


def parse_trigraph_code(code: str) -> Trigraph:
    n_str, labels = code.split(":")
    n = int(n_str)
    pairs = list(pair_order(n))
    if len(labels) != len(pairs):
        raise ParseError("trigraph code has wrong length")
    C = frozenset(p for p, ch in zip(pairs, labels) if ch == "C")
    S = frozenset(p for p, ch in zip(pairs, labels) if ch == "S")
    return Trigraph(n, C, S)


def load_graph(path) -> Graph:
    """Load a graph from a ``.g6`` file (first graph) or an edge-list file."""
    text = Path(path).read_text() if str(path) != "-" else _stdin()
    return graph_from_text(text, str(path))


def graph_from_text(text: str, name: str = "") -> Graph:
    first = next((ln for ln in text.splitlines() if ln.strip()), "")
    if name.endswith(".g6") or (first and len(first.split()) == 1):
        for lineno, line in enumerate(text.splitlines(), 1):
            if line.strip():
                try:
                    return parse_graph6(line)
                except ParseError as exc:
                    raise ParseError(str(exc), lineno) from None
        raise ParseError("no graph6 line found")
    return parse_edgelist(text)


def load_trigraph(path) -> Trigraph:
    text = Path(path).read_text() if str(path) != "-" else _stdin()
    return parse_trigraph_json(text)


def _stdin() -> str:
    import sys

    return sys.stdin.read()


def all_pairs(n: int):
    return combinations(range(n), 2)
