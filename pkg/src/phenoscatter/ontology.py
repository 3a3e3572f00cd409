"""OBO-style ontology parsing and reduction of terms by subsumption.

A small subset of the OBO format is understood: ``[Term]`` stanzas with
``id``, ``name``, ``is_a`` and ``is_obsolete`` tags. Terms form a DAG over
``is_a`` edges; specific terms are mapped to the nearest ancestor found in
a user-supplied category set.
"""

from __future__ import annotations

import logging
from collections import deque
from dataclasses import dataclass, field

from phenoscatter.errors import InputError

logger = logging.getLogger(__name__)


@dataclass
class OntologyGraph:
    """Immutable term DAG: ``terms`` maps id to display name, ``parents``
    maps id to its ``is_a`` targets in file order."""

    terms: dict[str, str]
    parents: dict[str, list[str]]

    def __contains__(self, term_id: str) -> bool:
        return term_id in self.terms

    def __len__(self) -> int:
        return len(self.terms)


@dataclass
class CategorySet:
    """Ordered category terms; position is the tie-break rank."""

    entries: list[tuple[str, str]] = field(default_factory=list)

    @property
    def ids(self) -> list[str]:
        return [term_id for term_id, _ in self.entries]

    @property
    def labels(self) -> list[str]:
        return [label for _, label in self.entries]

    def __len__(self) -> int:
        return len(self.entries)


@dataclass
class TermReduction:
    """Result of mapping a term list onto categories."""

    categories: set[str]
    n_dropped: int  # terms with no category ancestor
    n_unknown: int  # terms absent from the graph


@dataclass
class _Stanza:
    term_id: str | None = None
    name: str = ""
    obsolete: bool = False
    is_a: list[str] = field(default_factory=list)


def parse_obo(text: str) -> OntologyGraph:
    """Parse OBO text into an :class:`OntologyGraph`.

    Only ``[Term]`` stanzas are read; obsolete terms and stanzas without an
    ``id`` are dropped. ``is_a`` values may carry a `` ! comment`` suffix,
    which is stripped. Raises :class:`InputError` on duplicate ids, edges
    to undefined terms (reported all at once after the full parse), or a
    cycle in the parent relation.
    """
    terms: dict[str, str] = {}
    parents: dict[str, list[str]] = {}

    cur: _Stanza | None = None

    def flush() -> None:
        nonlocal cur
        if cur is not None and cur.term_id is not None and not cur.obsolete:
            if cur.term_id in terms:
                raise InputError(f"duplicate term id: {cur.term_id}")
            terms[cur.term_id] = cur.name or cur.term_id
            parents[cur.term_id] = cur.is_a
        cur = None

    for raw in text.splitlines():
        line = raw.strip()
        if line.startswith("[") and line.endswith("]"):
            flush()
            if line == "[Term]":
                cur = _Stanza()
            continue
        if cur is None or not line:
            continue
        tag, sep, value = line.partition(":")
        if not sep:
            continue
        tag = tag.strip()
        value = value.strip()
        if tag == "id":
            cur.term_id = value
        elif tag == "name":
            cur.name = value
        elif tag == "is_a":
            target = value.split("!", 1)[0].strip()
            if target:
                cur.is_a.append(target)
        elif tag == "is_obsolete":
            cur.obsolete = value.lower() == "true"
    flush()

    dangling = sorted(
        {p for plist in parents.values() for p in plist if p not in terms}
    )
    if dangling:
        raise InputError(
            "is_a edges point to undefined or obsolete terms: "
            + ", ".join(dangling)
        )

    _check_acyclic(parents)
    return OntologyGraph(terms=terms, parents=parents)


def _check_acyclic(parents: dict[str, list[str]]) -> None:
    """Raise :class:`InputError` naming a cycle member if one exists."""
    WHITE, GRAY, BLACK = 0, 1, 2
    color = dict.fromkeys(parents, WHITE)
    for start in parents:
        if color[start] != WHITE:
            continue
        stack: list[tuple[str, int]] = [(start, 0)]
        color[start] = GRAY
        while stack:
            node, idx = stack[-1]
            edges = parents[node]
            if idx < len(edges):
                stack[-1] = (node, idx + 1)
                nxt = edges[idx]
                if color[nxt] == GRAY:
                    raise InputError(f"cycle in is_a hierarchy involving: {nxt}")
                if color[nxt] == WHITE:
                    color[nxt] = GRAY
                    stack.append((nxt, 0))
            else:
                color[node] = BLACK
                stack.pop()


def ancestors(graph: OntologyGraph, term_id: str) -> set[str]:
    """All terms reachable from ``term_id`` over parent edges, excluding
    ``term_id`` itself."""
    if term_id not in graph.terms:
        raise InputError(f"unknown term id: {term_id}")
    seen: set[str] = set()
    queue = deque(graph.parents[term_id])
    while queue:
        node = queue.popleft()
        if node in seen:
            continue
        seen.add(node)
        queue.extend(graph.parents[node])
    return seen


def load_categories(text: str, graph: OntologyGraph) -> CategorySet:
    """Read a category file: one term id per line, optional TAB-separated
    display label; ``#`` lines and blank lines are ignored.

    Labels default to the term's ontology name. Categories that are
    ancestors of other categories are allowed but logged, because the
    nearest-ancestor rule then shadows the shallower category.
    """
    entries: list[tuple[str, str]] = []
    seen: set[str] = set()
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        term_id, _, label = line.partition("\t")
        term_id = term_id.strip()
        label = label.strip()
        if term_id not in graph.terms:
            raise InputError(f"category file line {lineno}: unknown term id {term_id}")
        if term_id in seen:
            raise InputError(f"category file line {lineno}: duplicate category {term_id}")
        seen.add(term_id)
        entries.append((term_id, label or graph.terms[term_id]))

    cats = CategorySet(entries=entries)
    for cat_id, _ in cats.entries:
        above = ancestors(graph, cat_id) & seen
        if above:
            logger.warning(
                "category %s is a descendant of categories %s; the deeper "
                "category shadows the shallower one",
                cat_id,
                ", ".join(sorted(above)),
            )
    return cats


def subsume(graph: OntologyGraph, categories: CategorySet, term_id: str) -> str | None:
    """Map ``term_id`` to the nearest category at or above it.

    Distance is hop count over parent edges (0 for the term itself); ties
    go to the category listed first. Returns ``None`` when no category is
    an ancestor of (or equal to) the term.
    """
    if term_id not in graph.terms:
        raise InputError(f"unknown term id: {term_id}")
    rank = {cid: pos for pos, cid in enumerate(categories.ids)}

    # Level-order walk; the first level containing any category wins.
    level = [term_id]
    visited = {term_id}
    while level:
        hits = [rank[n] for n in level if n in rank]
        if hits:
            return categories.ids[min(hits)]
        nxt: list[str] = []
        for node in level:
            for parent in graph.parents[node]:
                if parent not in visited:
                    visited.add(parent)
                    nxt.append(parent)
        level = nxt
    return None


def reduce_terms(
    graph: OntologyGraph,
    categories: CategorySet,
    term_ids: list[str],
    strict: bool = False,
) -> TermReduction:
    """Union of ``subsume`` over ``term_ids``.

    Unknown terms are counted and skipped unless ``strict``; terms with no
    category ancestor are counted as dropped.
    """
    mapped: set[str] = set()
    n_dropped = 0
    n_unknown = 0
    for term_id in term_ids:
        if term_id not in graph.terms:
            if strict:
                raise InputError(f"unknown term id: {term_id}")
            n_unknown += 1
            continue
        cat = subsume(graph, categories, term_id)
        if cat is None:
            n_dropped += 1
        else:
            mapped.add(cat)
    return TermReduction(categories=mapped, n_dropped=n_dropped, n_unknown=n_unknown)
