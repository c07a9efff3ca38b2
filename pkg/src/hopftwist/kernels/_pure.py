"""Pure-Python integer polynomial kernels.

Polynomials are lists of Python ints, lowest degree first.  ``phi`` is
always monic of degree ``d`` (``len(phi) == d + 1``), so reduction keeps
integer coefficients integral.
"""


def poly_reduce(c, phi):
    """Reduce the integer polynomial ``c`` modulo the monic ``phi``."""
    d = len(phi) - 1
    r = list(c)
    if len(r) < d:
        r.extend([0] * (d - len(r)))
        return r
    for k in range(len(r) - 1, d - 1, -1):
        t = r[k]
        if t:
            base = k - d
            for i in range(d):
                p = phi[i]
                if p:
                    r[base + i] -= t * p
    del r[d:]
    return r


def poly_mulmod(a, b, phi):
    """Product of two reduced polynomials, reduced modulo ``phi``."""
    la, lb = len(a), len(b)
    prod = [0] * (la + lb - 1)
    for i in range(la):
        x = a[i]
        if x:
            for j in range(lb):
                y = b[j]
                if y:
                    prod[i + j] += x * y
    return poly_reduce(prod, phi)


def matmul(A, B, nrows, ninner, ncols, phi):
    """Matrix product over Z[x]/(phi).

    ``A`` is a flat list of ``nrows * ninner`` coefficient vectors of
    length ``d`` each, concatenated row-major; ``B`` likewise with shape
    ``ninner x ncols``.  Products are accumulated unreduced and reduced
    once per output entry.
    """
    d = len(phi) - 1
    w = 2 * d - 1
    out = []
    for i in range(nrows):
        acc = [[0] * w for _ in range(ncols)]
        touched = [False] * ncols
        for k in range(ninner):
            ao = (i * ninner + k) * d
            a = A[ao:ao + d]
            if not any(a):
                continue
            for j in range(ncols):
                bo = (k * ncols + j) * d
                b = B[bo:bo + d]
                if not any(b):
                    continue
                touched[j] = True
                row = acc[j]
                for s in range(d):
                    x = a[s]
                    if x:
                        for t in range(d):
                            y = b[t]
                            if y:
                                row[s + t] += x * y
        for j in range(ncols):
            if touched[j]:
                out.extend(poly_reduce(acc[j], phi))
            else:
                out.extend([0] * d)
    return out
