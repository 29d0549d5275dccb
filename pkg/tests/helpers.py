"""Test-side helpers: dense tensor access, mutations, and an independent
loop-based axiom oracle (deliberately *not* the library's matrix-identity
formulation, so axiom names reported by hopf_make can be cross-checked)."""

from __future__ import annotations

from hopfchrom import HopfAlgebra


def dense_tensors(H: HopfAlgebra):
    """Mutable dense copies of all structure tensors."""
    return {
        "mult": H._dense_mult(),
        "comult": H._dense_comult(),
        "unit": list(H.unit),
        "counit": list(H.counit),
        "antipode": [list(r) for r in H.antipode.dense()],
    }


def mutate(tensors: dict, kind: str, index: tuple, field) -> dict:
    """Copy of the tensors with one entry bumped by +1."""
    out = {
        "mult": [[list(c) for c in r] for r in tensors["mult"]],
        "comult": [[list(c) for c in r] for r in tensors["comult"]],
        "unit": list(tensors["unit"]),
        "counit": list(tensors["counit"]),
        "antipode": [list(r) for r in tensors["antipode"]],
    }
    tgt = out[kind]
    if kind in ("mult", "comult"):
        i, j, k = index
        tgt[i][j][k] = field.add(tgt[i][j][k], field.one)
    elif kind == "antipode":
        i, j = index
        tgt[i][j] = field.add(tgt[i][j], field.one)
    else:
        (i,) = index
        tgt[i] = field.add(tgt[i], field.one)
    return out


def _mul_vec(field, mult, a, b):
    n = len(a)
    out = [field.zero] * n
    for i in range(n):
        if a[i] == field.zero:
            continue
        for j in range(n):
            if b[j] == field.zero:
                continue
            c = field.mul(a[i], b[j])
            for k in range(n):
                if mult[i][j][k] != field.zero:
                    out[k] = field.add(out[k], field.mul(c, mult[i][j][k]))
    return out


def _basis(field, n, i):
    v = [field.zero] * n
    v[i] = field.one
    return v


def _naive_rank(field, rows):
    rows = [list(r) for r in rows]
    ncols = len(rows[0]) if rows else 0
    rank = 0
    for col in range(ncols):
        piv = None
        for r in range(rank, len(rows)):
            if rows[r][col] != field.zero:
                piv = r
                break
        if piv is None:
            continue
        rows[rank], rows[piv] = rows[piv], rows[rank]
        inv = field.inv(rows[rank][col])
        rows[rank] = [field.mul(inv, v) for v in rows[rank]]
        for r in range(len(rows)):
            if r != rank and rows[r][col] != field.zero:
                c = rows[r][col]
                rows[r] = [field.sub(x, field.mul(c, y))
                           for x, y in zip(rows[r], rows[rank])]
        rank += 1
    return rank


def axiom_violated(field, tensors: dict, axiom: str) -> bool:
    """Loop-based check that one named axiom fails on dense tensors."""
    mult = tensors["mult"]
    comult = tensors["comult"]
    unit = tensors["unit"]
    counit = tensors["counit"]
    antipode = tensors["antipode"]
    n = len(unit)
    zero, one = field.zero, field.one
    basis = [_basis(field, n, i) for i in range(n)]

    if axiom == "associativity":
        for i in range(n):
            for j in range(n):
                ij = _mul_vec(field, mult, basis[i], basis[j])
                for k in range(n):
                    lhs = _mul_vec(field, mult, ij, basis[k])
                    rhs = _mul_vec(field, mult,
                                   basis[i], _mul_vec(field, mult, basis[j], basis[k]))
                    if lhs != rhs:
                        return True
        return False
    if axiom == "unitality":
        for j in range(n):
            if _mul_vec(field, mult, unit, basis[j]) != basis[j]:
                return True
            if _mul_vec(field, mult, basis[j], unit) != basis[j]:
                return True
        return False
    if axiom == "coassociativity":
        for k in range(n):
            for i in range(n):
                for j in range(n):
                    for l in range(n):
                        lhs = zero
                        rhs = zero
                        for a in range(n):
                            lhs = field.add(lhs, field.mul(comult[k][a][l], comult[a][i][j]))
                            rhs = field.add(rhs, field.mul(comult[k][i][a], comult[a][j][l]))
                        if lhs != rhs:
                            return True
        return False
    if axiom == "counitality":
        for k in range(n):
            for j in range(n):
                left = zero
                right = zero
                for a in range(n):
                    left = field.add(left, field.mul(counit[a], comult[k][a][j]))
                    right = field.add(right, field.mul(counit[a], comult[k][j][a]))
                want = one if k == j else zero
                if left != want or right != want:
                    return True
        return False
    if axiom == "comultiplication-algebra-map":
        for k in range(n):
            for a in range(n):
                for b in range(n):
                    want = field.mul(unit[a], unit[b])
                    got = zero
                    for m in range(n):
                        got = field.add(got, field.mul(unit[m], comult[m][a][b]))
                    if got != want:
                        return True
        for i in range(n):
            for j in range(n):
                lhs = [[zero] * n for _ in range(n)]
                for k in range(n):
                    if mult[i][j][k] == zero:
                        continue
                    for a in range(n):
                        for b in range(n):
                            if comult[k][a][b] != zero:
                                lhs[a][b] = field.add(
                                    lhs[a][b], field.mul(mult[i][j][k], comult[k][a][b]))
                rhs = [[zero] * n for _ in range(n)]
                for p in range(n):
                    for q in range(n):
                        cpq = comult[i][p][q]
                        if cpq == zero:
                            continue
                        for r in range(n):
                            for s in range(n):
                                crs = comult[j][r][s]
                                if crs == zero:
                                    continue
                                c = field.mul(cpq, crs)
                                pr = _mul_vec(field, mult, basis[p], basis[r])
                                qs = _mul_vec(field, mult, basis[q], basis[s])
                                for a in range(n):
                                    if pr[a] == zero:
                                        continue
                                    for b in range(n):
                                        if qs[b] != zero:
                                            rhs[a][b] = field.add(
                                                rhs[a][b],
                                                field.mul(c, field.mul(pr[a], qs[b])))
                if lhs != rhs:
                    return True
        return False
    if axiom == "counit-algebra-map":
        got = zero
        for m in range(n):
            got = field.add(got, field.mul(counit[m], unit[m]))
        if got != one:
            return True
        for i in range(n):
            for j in range(n):
                lhs = zero
                for k in range(n):
                    lhs = field.add(lhs, field.mul(mult[i][j][k], counit[k]))
                if lhs != field.mul(counit[i], counit[j]):
                    return True
        return False
    if axiom == "antipode-axiom":
        s_img = [[antipode[i][j] for i in range(n)] for j in range(n)]  # S(e_j)
        for k in range(n):
            lhs = [zero] * n
            rhs = [zero] * n
            for a in range(n):
                for b in range(n):
                    c = comult[k][a][b]
                    if c == zero:
                        continue
                    for t, v in enumerate(_mul_vec(field, mult, s_img[a], basis[b])):
                        lhs[t] = field.add(lhs[t], field.mul(c, v))
                    for t, v in enumerate(_mul_vec(field, mult, basis[a], s_img[b])):
                        rhs[t] = field.add(rhs[t], field.mul(c, v))
            want = [field.mul(counit[k], u) for u in unit]
            if lhs != want or rhs != want:
                return True
        return False
    if axiom == "antipode-invertibility":
        return _naive_rank(field, antipode) < n
    raise ValueError(f"unknown axiom {axiom!r}")
