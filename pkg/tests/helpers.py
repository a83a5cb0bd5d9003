"""Independent oracles used to cross-check the library implementations.

Everything in this file is deliberately written with a different algorithm
than the code under test: edit distance by exhaustive alignment enumeration
instead of dynamic programming, polynomial products by schoolbook
convolution instead of packed-integer shifts, irreducibility by trial
division, and code enumeration by breadth-first closure instead of
row-echelon span walks.
"""

from itertools import combinations


def alignment_edit_distance(x, y, costs=None):
    """Minimum alignment cost between sequences x and y.

    Enumerates every monotone alignment (pairs of equal-size increasing
    position subsets), charging substitution cost for aligned positions and
    gap cost for the rest.  With no cost table: unit cost per mismatch,
    insertion, or deletion.
    """
    m, n = len(x), len(y)

    def sub(a, b):
        if costs is None:
            return 0 if a == b else 1
        return costs.cost(a, b)

    def gap_del(a):
        return 1 if costs is None else costs.cost(a, "-")

    def gap_ins(b):
        return 1 if costs is None else costs.cost("-", b)

    best = None
    for k in range(min(m, n) + 1):
        for idx in combinations(range(m), k):
            base_del = sum(gap_del(x[i]) for i in range(m) if i not in idx)
            for jdx in combinations(range(n), k):
                total = base_del
                total += sum(gap_ins(y[j]) for j in range(n) if j not in jdx)
                total += sum(sub(x[i], y[j]) for i, j in zip(idx, jdx))
                if best is None or total < best:
                    best = total
    return best


def convolution_mul(a_bits, b_bits):
    """GF(2) product of two coefficient lists (lowest degree first)."""
    if not a_bits or not b_bits:
        return []
    out = [0] * (len(a_bits) + len(b_bits) - 1)
    for i, ai in enumerate(a_bits):
        if not ai:
            continue
        for j, bj in enumerate(b_bits):
            out[i + j] ^= bj
    while out and out[-1] == 0:
        out.pop()
    return out


def _raw_mod(a: int, b: int) -> int:
    # schoolbook long division over GF(2), ints as coefficient masks
    db = b.bit_length() - 1
    while a.bit_length() - 1 >= db and a:
        a ^= b << (a.bit_length() - 1 - db)
    return a


def trial_division_irreducible(value: int) -> bool:
    """Irreducibility of a GF(2) polynomial by dividing out all candidates."""
    deg = value.bit_length() - 1
    if deg < 1:
        return False
    for d in range(1, deg // 2 + 1):
        for cand in range(1 << d, 1 << (d + 1)):
            if _raw_mod(value, cand) == 0:
                return False
    return True


def bfs_closure(generators, shift, scale_ops):
    """Smallest set containing the generators that is closed under XOR of
    members, the given shift map, and each scalar map in scale_ops."""
    members = {0}
    frontier = [g for g in generators if g]
    for g in frontier:
        members.add(g)
    while frontier:
        w = frontier.pop()
        images = [shift(w)] + [op(w) for op in scale_ops]
        images += [w ^ other for other in list(members)]
        for img in images:
            if img not in members:
                members.add(img)
                frontier.append(img)
    return members


def closure_r_words(generators, n):
    from dnacodes import ring64

    return bfs_closure(
        generators,
        lambda w: ring64.word_shift(w, n),
        [lambda w: ring64.word_scale_u(w, n)],
    )


def closure_skew_words(generators, n):
    from dnacodes import skew

    return bfs_closure(
        generators,
        lambda w: skew.skew_shift(w, n),
        [lambda w: skew.word_scale_v(w, n)],
    )
