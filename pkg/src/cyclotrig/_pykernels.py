"""Reference kernels for arithmetic in Z[x]/(Phi_n), on plain Python ints.

Vectors are lists of ints in the power basis; ``phi`` is the coefficient
list of a monic Phi_n, lowest degree first. These are the exact fallback
for the compiled kernels and must agree with them bit for bit.
"""

from math import gcd


def reduce(c, phi):
    m = len(phi) - 1
    c = list(c)
    for i in range(len(c) - 1, m - 1, -1):
        t = c[i]
        if t:
            base = i - m
            for j in range(m):
                pj = phi[j]
                if pj:
                    c[base + j] -= t * pj
    if len(c) < m:
        c.extend([0] * (m - len(c)))
    return c[:m]


def mulmod(a, b, phi):
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                if y:
                    out[i + j] += x * y
    return reduce(out, phi)


def substitute(x, k, n, phi):
    """sum_j x[j] * zeta_n**(j*k mod n), reduced mod phi."""
    acc = [0] * n
    for j, v in enumerate(x):
        if v:
            acc[(j * k) % n] += v
    return reduce(acc, phi)


def orbit(x, n, phi):
    """Distinct images of x under sigma_k, k coprime to n, in increasing k."""
    seen = {}
    for k in range(1, n + 1):
        if gcd(k, n) == 1:
            seen.setdefault(tuple(substitute(x, k, n, phi)), None)
    return [list(v) for v in seen]


def orbit_product(conjugates, den, phi):
    """Coefficients of prod_i (den*X - v_i) as vectors, constant term first."""
    m = len(phi) - 1
    poly = [[1] + [0] * (m - 1)]
    for v in conjugates:
        neg = [-t for t in v]
        new = [[0] * m for _ in range(len(poly) + 1)]
        for i, c in enumerate(poly):
            shifted = new[i + 1]
            for j in range(m):
                shifted[j] += c[j] * den
            prod = mulmod(c, neg, phi)
            row = new[i]
            for j in range(m):
                row[j] += prod[j]
        poly = new
    return poly


def inverse_mod_p(a, phi, p):
    """u with u*a == 1 mod (phi, p), or None when a is not invertible mod p.

    Extended Euclid over F_p; ``a`` and ``phi`` may hold any ints.
    """
    m = len(phi) - 1

    def trim(f):
        while f and f[-1] == 0:
            f.pop()
        return f

    r0 = trim([c % p for c in phi])
    r1 = trim([c % p for c in a])
    s0, s1 = [], [1]
    while len(r1) > 1:
        r = list(r0)
        inv_lead = pow(r1[-1], -1, p)
        q = [0] * (len(r) - len(r1) + 1)
        while len(r) >= len(r1):
            c = r[-1] * inv_lead % p
            shift = len(r) - len(r1)
            q[shift] = c
            if c:
                for j, v in enumerate(r1):
                    r[shift + j] = (r[shift + j] - c * v) % p
            r.pop()
            trim(r)
        ns = s0 + [0] * max(0, len(q) + len(s1) - 1 - len(s0))
        for i, x in enumerate(q):
            if x:
                for j, y in enumerate(s1):
                    ns[i + j] = (ns[i + j] - x * y) % p
        r0, r1 = r1, r
        s0, s1 = s1, trim(ns)
    if not r1:
        return None
    c = pow(r1[0], -1, p)
    out = [v * c % p for v in s1]
    return out + [0] * (m - len(out))



def orbit_product_split(conjugates, den, n, p, g):
    """Expand prod (den*X - s) over the conjugates in every embedding mod p.

    p must be 1 mod n and g a primitive n-th root of unity mod p, so that
    F_p[x]/Phi_n is the product of the copies of F_p given by x -> g**e for
    e coprime to n. A coefficient is rational iff its images agree in all
    copies. Returns (coefficients mod p of the first copy, all agree).
    """
    powers = [pow(g, i, p) for i in range(n)]
    units = [e for e in range(n) if gcd(e, n) == 1]
    vectors = [[c % p for c in v] for v in conjugates]
    d = den % p
    first = None
    for e in units:
        poly = [1]
        for v in vectors:
            s = sum(c * powers[j * e % n] for j, c in enumerate(v)) % p
            # poly *= (d*X - s)
            nxt = [0] * (len(poly) + 1)
            for i, c in enumerate(poly):
                nxt[i] = (nxt[i] - c * s) % p
                nxt[i + 1] = (nxt[i + 1] + c * d) % p
            poly = nxt
        if first is None:
            first = poly
        elif poly != first:
            return first, False
    return first, True
