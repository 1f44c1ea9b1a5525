"""Text file formats for graphs, hypergraphs and colourings.

Graph format: a header line ``p <n> <m>`` followed by m lines ``e <u> <v>``
with 0-based endpoints. Blank lines and lines starting with ``c`` are
ignored.

Hypergraph format: a header line ``h <n> <m>`` followed by exactly m lines
of space-separated 0-based vertex ids; an empty line is an empty edge.
Blank lines and ``c`` comments are only skipped before the header.

Colouring format: lines ``<vertex> <colour>`` with 0-based vertices and
1-based colours; colour 0 means unassigned.
"""

from __future__ import annotations

import io
from typing import Optional, TextIO, Union

from .core import Colouring, Graph, Hypergraph

PathOrFile = Union[str, "io.TextIOBase", TextIO]


def _open_read(src: PathOrFile):
    if isinstance(src, str):
        return open(src, "r", encoding="utf-8"), True
    return src, False


def _open_write(dst: PathOrFile):
    if isinstance(dst, str):
        return open(dst, "w", encoding="utf-8"), True
    return dst, False


def read_graph(src: PathOrFile) -> Graph:
    f, close = _open_read(src)
    try:
        n = None
        m = None
        edges = []
        for raw in f:
            line = raw.strip()
            if not line or line.startswith("c"):
                continue
            parts = line.split()
            if parts[0] == "p":
                if n is not None:
                    raise ValueError("multiple 'p' header lines")
                n, m = int(parts[1]), int(parts[2])
            elif parts[0] == "e":
                if n is None:
                    raise ValueError("edge line before 'p' header")
                edges.append((int(parts[1]), int(parts[2])))
            else:
                raise ValueError(f"unrecognised graph line: {line!r}")
        if n is None:
            raise ValueError("missing 'p <n> <m>' header")
        if m is not None and m != len(edges):
            raise ValueError(f"header declares {m} edges but file has {len(edges)}")
        return Graph(n, edges)
    finally:
        if close:
            f.close()


def write_graph(g: Graph, dst: PathOrFile) -> None:
    f, close = _open_write(dst)
    try:
        f.write(f"p {g.n} {g.m}\n")
        for u, v in g.edges:
            f.write(f"e {u} {v}\n")
    finally:
        if close:
            f.close()


def read_hypergraph(src: PathOrFile) -> Hypergraph:
    f, close = _open_read(src)
    try:
        lines = f.read().split("\n")
        i = 0
        while i < len(lines):
            stripped = lines[i].strip()
            if stripped and not stripped.startswith("c"):
                break
            i += 1
        if i == len(lines):
            raise ValueError("missing 'h <n> <m>' header")
        parts = lines[i].split()
        if parts[0] != "h":
            raise ValueError(f"expected 'h <n> <m>' header, got {lines[i]!r}")
        n, m = int(parts[1]), int(parts[2])
        edges = []
        for j in range(m):
            if i + 1 + j >= len(lines):
                raise ValueError(f"header declares {m} edges but file ends early")
            line = lines[i + 1 + j].strip()
            edges.append(tuple(int(tok) for tok in line.split()) if line else ())
        return Hypergraph(n, edges)
    finally:
        if close:
            f.close()


def write_hypergraph(h: Hypergraph, dst: PathOrFile) -> None:
    f, close = _open_write(dst)
    try:
        f.write(f"h {h.n} {h.m}\n")
        for e in h.edges:
            f.write(" ".join(str(v) for v in e) + "\n")
    finally:
        if close:
            f.close()


def read_colouring(src: PathOrFile, n: Optional[int] = None, k: Optional[int] = None) -> Colouring:
    """Read a colouring; n and k default to the largest ids in the file."""
    f, close = _open_read(src)
    try:
        pairs = []
        for raw in f:
            line = raw.strip()
            if not line or line.startswith("c"):
                continue
            v_str, c_str = line.split()
            pairs.append((int(v_str), int(c_str)))
        if n is None:
            n = max((v for v, _ in pairs), default=-1) + 1
        if k is None:
            k = max((c for _, c in pairs), default=0)
        assignment: list[Optional[int]] = [None] * n
        for v, c in pairs:
            if not (0 <= v < n):
                raise ValueError(f"vertex {v} outside range [0,{n})")
            assignment[v] = None if c == 0 else c
        return Colouring(k, assignment)
    finally:
        if close:
            f.close()


def write_colouring(c: Colouring, dst: PathOrFile) -> None:
    f, close = _open_write(dst)
    try:
        for v, colour in enumerate(c.assignment):
            f.write(f"{v} {0 if colour is None else colour}\n")
    finally:
        if close:
            f.close()
