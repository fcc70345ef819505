"""Sparse exact kernels over QQ or F_p."""

from __future__ import annotations


def sparse_kernel(columns: list[dict], domain) -> list[dict[int, object]]:
    """Basis of the kernel of the matrix whose columns are sparse dicts ``row -> coeff``.

    Returns combinations ``{column index: coefficient}``.  Rows must be mutually
    comparable.  Columns are consumed.
    """
    mod = domain.characteristic
    pivots: dict = {}
    kernel = []
    for idx, col in enumerate(columns):
        v = {r: c for r, c in col.items() if c}
        comb = {idx: domain.one}
        while v:
            r = max(v)
            piv = pivots.get(r)
            if piv is None:
                inv = domain.inv(v[r])
                if mod:
                    v = {k: c * inv % mod for k, c in v.items()}
                    comb = {k: c * inv % mod for k, c in comb.items()}
                else:
                    v = {k: c * inv for k, c in v.items()}
                    comb = {k: c * inv for k, c in comb.items()}
                pivots[r] = (v, comb)
                break
            pv, pc = piv
            f = v[r]
            for target, src in ((v, pv), (comb, pc)):
                for k, c in src.items():
                    x = target.get(k, 0) - f * c
                    if mod:
                        x %= mod
                    if x:
                        target[k] = x
                    else:
                        target.pop(k, None)
        else:
            kernel.append(comb)
    return kernel
