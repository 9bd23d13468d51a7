"""Simple undirected graphs in compressed adjacency form, plus edge streams.

The graph is immutable after construction: vertex ids are dense
``0..n-1``, adjacency is stored CSR-style (``indptr``/``indices``) with
each neighbor run sorted strictly ascending.  Ids present nowhere in the
edge list but below the maximum id (or below an explicit header count)
are isolated vertices.
"""

from __future__ import annotations

import io
import logging
import os
import re
from bisect import bisect_left
from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, Iterator

import numpy as np

log = logging.getLogger(__name__)

_HEADER_RE = re.compile(r"^[#%]\s*n\s*=\s*(\d+)\s*$")


class ParseError(ValueError):
    """Malformed edge-list input."""


@dataclass(frozen=True, eq=False)
class Graph:
    """Immutable simple undirected graph.

    ``indptr`` has length ``n + 1``; ``indices[indptr[i]:indptr[i+1]]``
    is the sorted neighbor run of vertex ``i``.  Safe to share across
    concurrent readers.
    """

    n: int
    m: int
    indptr: np.ndarray = field(repr=False)
    indices: np.ndarray = field(repr=False)

    @classmethod
    def from_edges(cls, edges: Iterable[tuple[int, int]], n: int | None = None) -> "Graph":
        """Build a graph from unique undirected edges.

        Rejects self-loops and duplicate undirected edges; use
        :func:`load_edge_list` for tolerant ingestion of raw files.
        """
        pairs = [(int(u), int(v)) for u, v in edges]
        for u, v in pairs:
            if u == v:
                raise ValueError(f"self-loop ({u},{u}) not allowed")
            if u < 0 or v < 0:
                raise ValueError("vertex ids must be nonnegative")
        keys = {(min(u, v), max(u, v)) for u, v in pairs}
        if len(keys) != len(pairs):
            raise ValueError("duplicate undirected edges not allowed")
        max_id = max((max(u, v) for u, v in pairs), default=-1)
        if n is None:
            n = max_id + 1
        elif max_id >= n:
            raise ValueError(f"vertex id {max_id} out of declared range n={n}")
        m = len(pairs)
        if m == 0:
            indptr = np.zeros(n + 1, dtype=np.int64)
            return cls(n=n, m=0, indptr=indptr, indices=np.zeros(0, dtype=np.int64))
        und = np.array(pairs, dtype=np.int64)
        both = np.concatenate([und, und[:, ::-1]])
        order = np.lexsort((both[:, 1], both[:, 0]))
        both = both[order]
        indices = np.ascontiguousarray(both[:, 1])
        indptr = np.zeros(n + 1, dtype=np.int64)
        np.cumsum(np.bincount(both[:, 0], minlength=n), out=indptr[1:])
        return cls(n=n, m=m, indptr=indptr, indices=indices)

    @cached_property
    def degrees(self) -> np.ndarray:
        return np.diff(self.indptr)

    def degree(self, i: int) -> int:
        self._check_id(i)
        return int(self.indptr[i + 1] - self.indptr[i])

    def neighbors(self, i: int) -> np.ndarray:
        """Sorted neighbor ids of ``i`` (a read-only view)."""
        self._check_id(i)
        return self.indices[self.indptr[i] : self.indptr[i + 1]]

    @cached_property
    def adjacency_lists(self) -> list[list[int]]:
        """Per-vertex sorted neighbor lists as plain ints (for hot loops)."""
        idx = self.indices.tolist()
        ptr = self.indptr.tolist()
        return [idx[ptr[i] : ptr[i + 1]] for i in range(self.n)]

    @cached_property
    def degree_list(self) -> list[int]:
        """Degrees as plain ints (for hot loops)."""
        return np.diff(self.indptr).tolist()

    def edges(self) -> Iterator[tuple[int, int]]:
        """Each undirected edge once, as (i, j) with i < j, lexicographic."""
        for i in range(self.n):
            for j in self.indices[self.indptr[i] : self.indptr[i + 1]]:
                if i < j:
                    yield i, int(j)

    def _check_id(self, i: int) -> None:
        if not 0 <= i < self.n:
            raise IndexError(f"vertex id {i} out of range [0,{self.n})")

    def __eq__(self, other) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return (
            self.n == other.n
            and self.m == other.m
            and np.array_equal(self.indptr, other.indptr)
            and np.array_equal(self.indices, other.indices)
        )

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.m})"


def has_edge(g: Graph, i: int, j: int) -> bool:
    """True iff {i, j} is an edge, by binary search in the neighbor list."""
    g._check_id(i)
    g._check_id(j)
    nb = g.adjacency_lists[i]
    k = bisect_left(nb, j)
    return k < len(nb) and nb[k] == j


def _iter_lines(source) -> Iterator[str]:
    if isinstance(source, (str, os.PathLike)):
        with open(source, "r", encoding="utf-8") as fh:
            yield from fh
    elif isinstance(source, io.IOBase) or hasattr(source, "read"):
        yield from source
    else:
        yield from source


def _parse_records(source):
    """Yield per-line records; returns (records, declared_n).

    A record is (lineno, u, v).  Comment lines start with '#' or '%';
    the header comment ``# n=<count>`` fixes the vertex universe.
    """
    records: list[tuple[int, int, int]] = []
    declared_n: int | None = None
    for lineno, raw in enumerate(_iter_lines(source), start=1):
        line = raw.strip()
        if not line:
            continue
        header = _HEADER_RE.match(line)
        if header:
            declared_n = int(header.group(1))
            continue
        if line.startswith("#") or line.startswith("%"):
            continue
        tokens = line.split()
        if len(tokens) != 2:
            raise ParseError(f"line {lineno}: expected two vertex ids, got {len(tokens)} tokens")
        try:
            u, v = int(tokens[0]), int(tokens[1])
        except ValueError:
            raise ParseError(f"line {lineno}: non-integer vertex id in {tokens!r}") from None
        if u < 0 or v < 0:
            raise ParseError(f"line {lineno}: vertex ids must be nonnegative")
        records.append((lineno, u, v))
    return records, declared_n


def load_edge_list(source) -> Graph:
    """Parse an edge-list text source into a validated :class:`Graph`.

    ``source`` may be a path, an open text file, or an iterable of lines.
    Self-loops and duplicate undirected edges are dropped (counts logged
    as warnings); a source with no edge records at all is an error.
    """
    records, declared_n = _parse_records(source)
    if not records:
        raise ParseError("empty input: no edge records")
    seen: set[tuple[int, int]] = set()
    edges: list[tuple[int, int]] = []
    self_loops = 0
    duplicates = 0
    max_id = -1
    for lineno, u, v in records:
        if u > max_id:
            max_id = u
        if v > max_id:
            max_id = v
        if u == v:
            self_loops += 1
            continue
        key = (u, v) if u < v else (v, u)
        if key in seen:
            duplicates += 1
            continue
        seen.add(key)
        edges.append(key)
    if self_loops:
        log.warning("dropped %d self-loop(s)", self_loops)
    if duplicates:
        log.warning("dropped %d duplicate edge(s)", duplicates)
    n = declared_n if declared_n is not None else max_id + 1
    if max_id >= n:
        raise ParseError(f"vertex id {max_id} exceeds declared universe n={n}")
    return Graph.from_edges(edges, n=n)


def write_edge_list(g: Graph, sink) -> None:
    """Write ``g`` in the edge-list format, with an explicit ``# n=`` header."""

    def _write(fh) -> None:
        fh.write(f"# n={g.n}\n")
        for i, j in g.edges():
            fh.write(f"{i} {j}\n")

    if isinstance(sink, (str, os.PathLike)):
        with open(sink, "w", encoding="utf-8") as fh:
            _write(fh)
    else:
        _write(sink)


class EdgeStreamSource:
    """Ordered, replayable sequence of undirected edges.

    Each undirected edge appears exactly once per pass, and iteration
    yields the identical sequence on every pass.  ``passes`` counts
    completed full traversals; abandoning an iteration midway does not
    count.
    """

    def __init__(self) -> None:
        self.passes = 0

    def _iter_edges(self) -> Iterator[tuple[int, int]]:
        raise NotImplementedError

    def __iter__(self) -> Iterator[tuple[int, int]]:
        yield from self._iter_edges()
        self.passes += 1

    @property
    def declared_n(self) -> int | None:
        """Vertex count from a ``# n=`` header, when the source carries one."""
        return None


class MemoryEdgeStream(EdgeStreamSource):
    """Edge stream over an in-memory sequence."""

    def __init__(self, edges: Iterable[tuple[int, int]], n: int | None = None) -> None:
        super().__init__()
        self._edges = [(int(u), int(v)) for u, v in edges]
        self._n = n

    def _iter_edges(self) -> Iterator[tuple[int, int]]:
        yield from self._edges

    @property
    def declared_n(self) -> int | None:
        return self._n


class FileEdgeStream(EdgeStreamSource):
    """Edge stream over an edge-list file (re-read lazily on every pass).

    Only one line is held in memory at a time, so the stream itself adds
    nothing to the estimator's working-set bound.
    """

    def __init__(self, path) -> None:
        super().__init__()
        self.path = path
        self._declared_n = self._scan_header()

    def _scan_header(self) -> int | None:
        with open(self.path, "r", encoding="utf-8") as fh:
            for raw in fh:
                line = raw.strip()
                if not line:
                    continue
                header = _HEADER_RE.match(line)
                if header:
                    return int(header.group(1))
                if line.startswith("#") or line.startswith("%"):
                    continue
                return None
        return None

    def _iter_edges(self) -> Iterator[tuple[int, int]]:
        with open(self.path, "r", encoding="utf-8") as fh:
            for lineno, raw in enumerate(fh, start=1):
                line = raw.strip()
                if not line or line.startswith("#") or line.startswith("%"):
                    continue
                tokens = line.split()
                if len(tokens) != 2:
                    raise ParseError(
                        f"line {lineno}: expected two vertex ids, got {len(tokens)} tokens"
                    )
                try:
                    u, v = int(tokens[0]), int(tokens[1])
                except ValueError:
                    raise ParseError(f"line {lineno}: non-integer vertex id in {tokens!r}") from None
                if u < 0 or v < 0:
                    raise ParseError(f"line {lineno}: vertex ids must be nonnegative")
                yield u, v

    @property
    def declared_n(self) -> int | None:
        return self._declared_n
