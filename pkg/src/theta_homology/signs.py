"""Koszul signs of symmetries of oriented two-loop hairy graphs.

A graph here is a theta shape, two junction vertices joined by three edges,
where edge e is subdivided by hairs[e] internal vertices each carrying one
hair (an edge ending in a univalent vertex), plus 0, 1, or 2 extra hairs on
the junctions themselves (the defect).  Its orientation is an ordered list of
tokens, one per vertex and per edge piece, with degrees depending on the two
parameters (m, N) through their parities only:

    external (univalent) vertex   degree -m
    internal vertex               degree -N
    any edge                      degree  N - 1

A symmetry of the graph permutes the tokens and may reverse edge pieces;
its sign is the Koszul sign of that permutation (odd-degree tokens
anticommute) times (-1)^N per reversed edge piece.  Everything in this module
is computed from that definition alone, by explicitly building token lists
and counting inversions; the closed-form predictions live in the
*_formula functions and are checked against the engine by the test-suite
and the `signs` CLI mode.

Two symmetries matter downstream: the vertical reflection, exchanging the
two junctions (it fixes the hair counts, and a graph whose reflection sign is
-1 is zero modulo orientation relations), and the transpositions of two of
the three edges (they realize the S3 action on hair triples).
"""

from __future__ import annotations


class UnsupportedSymmetryError(ValueError):
    """The requested symmetry has no well-defined self-map on this graph."""


def _validate(defect, hairs):
    if defect not in (0, 1, 2):
        raise ValueError(f"defect must be 0, 1, or 2, got {defect!r}")
    hairs = (int(hairs[0]), int(hairs[1]), int(hairs[2]))
    if min(hairs) < 0:
        raise ValueError(f"negative hair count in {hairs}")
    return hairs


def canonical_tokens(defect, hairs):
    """The ordered orientation list of the graph.

    Junction hair tips first, then their hair edges, then the two junctions,
    then the first segment of each edge, then per edge and per hair the block
    (subdivision vertex, hair edge, hair tip, next segment).  Edge e consists
    of segments ("seg", e, 0..hairs[e]), oriented left junction to right.
    """
    hairs = _validate(defect, hairs)
    sides = (1, 2)[:defect]
    tokens = [("tip", s) for s in sides]
    tokens += [("tipedge", s) for s in sides]
    tokens += [("junction", 1), ("junction", 2)]
    tokens += [("seg", e, 0) for e in (1, 2, 3)]
    for e in (1, 2, 3):
        for i in range(1, hairs[e - 1] + 1):
            tokens += [
                ("hairvert", e, i),
                ("hairedge", e, i),
                ("hairtip", e, i),
                ("seg", e, i),
            ]
    return tokens


def token_parity(token, case):
    """Degree parity of a token: m for hair tips, N for internal vertices,
    N-1 for edge pieces."""
    kind = token[0]
    if kind in ("tip", "hairtip"):
        return 1 if case.m_odd else 0
    if kind in ("junction", "hairvert"):
        return 1 if case.n_odd else 0
    if kind in ("tipedge", "hairedge", "seg"):
        return 0 if case.n_odd else 1
    raise ValueError(f"unknown token {token!r}")


def koszul_sign(positions, parities):
    """Sign of the reordering sending slot i to position positions[i].

    Each inversion pair whose two tokens both have odd degree contributes -1;
    equivalently, the sign of the induced permutation of the odd tokens.
    """
    if len(positions) != len(parities):
        raise ValueError("positions and parities have different lengths")
    odd_targets = [p for p, parity in zip(positions, parities) if parity % 2]
    inversions = 0
    for i in range(len(odd_targets)):
        for j in range(i + 1, len(odd_targets)):
            if odd_targets[i] > odd_targets[j]:
                inversions += 1
    return -1 if inversions % 2 else 1


def reversal_sign(reversed_edges, case):
    """(-1)^(N * number of reversed edge pieces)."""
    if case.n_odd and reversed_edges % 2:
        return -1
    return 1


def _mapped_sign(defect, hairs, case, image, target_defect, target_hairs, reversed_edges):
    """Koszul sign of the token map `image`, times the reversal contribution."""
    source = canonical_tokens(defect, hairs)
    target = canonical_tokens(target_defect, target_hairs)
    index = {token: i for i, token in enumerate(target)}
    positions = [index[image(token)] for token in source]
    parities = [token_parity(token, case) for token in source]
    return koszul_sign(positions, parities) * reversal_sign(reversed_edges, case)


def vertical_reflection_sign(defect, hairs, case):
    """First-principles sign of the junction-exchanging reflection.

    The reflection swaps the two junctions and everything attached to them,
    reverses each edge (hair i from the left becomes hair i from the right,
    segment j becomes segment hairs[e]-j), and flips the orientation of every
    edge segment; hair edges keep their tip-outward direction.  At defect 1
    the reflection moves the junction hair to the other junction, a different
    graph presentation, so no self-symmetry sign exists and we refuse.
    """
    hairs = _validate(defect, hairs)
    if defect == 1:
        raise UnsupportedSymmetryError(
            "the vertical reflection is not a self-map at defect 1"
        )

    def image(token):
        kind = token[0]
        if kind in ("tip", "tipedge", "junction"):
            return (kind, 3 - token[1])
        e = token[1]
        if kind == "seg":
            return (kind, e, hairs[e - 1] - token[2])
        return (kind, e, hairs[e - 1] + 1 - token[2])

    reversed_edges = sum(hairs) + 3
    return _mapped_sign(defect, hairs, case, image, defect, hairs, reversed_edges)


def edge_swap_sign(defect, hairs, case, p, q):
    """First-principles sign of transposing edges p and q (1-based).

    Maps the graph with hair counts `hairs` to the one with counts swapped;
    junction data is fixed and no edge piece is reversed.
    """
    hairs = _validate(defect, hairs)
    if p == q or not {p, q} <= {1, 2, 3}:
        raise ValueError(f"need two distinct edges among 1..3, got {(p, q)}")
    swap = {p: q, q: p}

    def image(token):
        kind = token[0]
        if kind in ("tip", "tipedge", "junction"):
            return token
        e = token[1]
        return (kind, swap.get(e, e)) + token[2:]

    target = list(hairs)
    target[p - 1], target[q - 1] = target[q - 1], target[p - 1]
    return _mapped_sign(defect, hairs, case, image, defect, tuple(target), 0)


def _sum_pair_products(hairs):
    k1, k2, k3 = hairs
    return k1 * k2 + k1 * k3 + k2 * k3


def vertical_reflection_sign_formula(defect, hairs, case):
    """Closed form for the reflection sign at defects 2 and 0.

    Defect 2: (-1)^(m+N+1) (-1)^(k1+k2+k3) (-1)^((m+N) sum k_i(k_i-1)/2);
    defect 0 drops the leading (m+N+1) factor.  All exponents mod 2.
    """
    hairs = _validate(defect, hairs)
    if defect == 1:
        raise UnsupportedSymmetryError(
            "no closed form: the vertical reflection is not a self-map at defect 1"
        )
    exponent = sum(hairs)
    m_plus_n = (1 if case.m_odd else 0) + (1 if case.n_odd else 0)
    if defect == 2:
        exponent += m_plus_n + 1
    exponent += m_plus_n * sum(k * (k - 1) // 2 for k in hairs)
    return -1 if exponent % 2 else 1


def edge_swap_sign_formula(hairs, case, p, q):
    """Closed form for the edge transposition sign.

    Adjacent transpositions: (-1)^(N-1) (-1)^(k_p k_q (m+N)).  The outer
    transposition (1,3) is the composite of three adjacent ones, which
    telescopes to (-1)^(N-1) (-1)^((m+N)(k1 k2 + k1 k3 + k2 k3)).
    """
    hairs = _validate(0, hairs)
    p, q = min(p, q), max(p, q)
    if (p, q) not in ((1, 2), (2, 3), (1, 3)):
        raise ValueError(f"need two distinct edges among 1..3, got {(p, q)}")
    m_plus_n = (1 if case.m_odd else 0) + (1 if case.n_odd else 0)
    exponent = 0 if case.n_odd else 1  # N - 1
    if (p, q) == (1, 3):
        exponent += m_plus_n * _sum_pair_products(hairs)
    else:
        exponent += m_plus_n * hairs[p - 1] * hairs[q - 1]
    return -1 if exponent % 2 else 1
