# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled kernels for Z[x]/(Phi_n) on 64-bit integers.

Same API as ``_pykernels``. Every entry point returns ``None`` when an
input or intermediate value leaves the int64 range; the caller then
reruns the call on the exact Python-int path.
"""

from libc.stdlib cimport calloc, free
from math import gcd

cdef extern from *:
    bint mul_ovf "__builtin_mul_overflow" (long long a, long long b, long long *res) noexcept nogil
    bint add_ovf "__builtin_add_overflow" (long long a, long long b, long long *res) noexcept nogil
    bint sub_ovf "__builtin_sub_overflow" (long long a, long long b, long long *res) noexcept nogil


cdef long long* _load(object seq, Py_ssize_t length) except? NULL:
    # raises OverflowError if an entry does not fit in int64
    cdef long long* buf = <long long*>calloc(length if length > 0 else 1, sizeof(long long))
    cdef Py_ssize_t i
    if buf == NULL:
        raise MemoryError()
    try:
        for i in range(len(seq)):
            buf[i] = seq[i]
    except OverflowError:
        free(buf)
        raise
    return buf


cdef list _dump(long long* buf, Py_ssize_t length):
    return [buf[i] for i in range(length)]


cdef bint _reduce(long long* c, Py_ssize_t length, long long* phi, Py_ssize_t m) noexcept nogil:
    cdef Py_ssize_t i, j, base
    cdef long long t, p
    for i in range(length - 1, m - 1, -1):
        t = c[i]
        if t != 0:
            base = i - m
            for j in range(m):
                if phi[j] != 0:
                    if mul_ovf(t, phi[j], &p):
                        return True
                    if sub_ovf(c[base + j], p, &c[base + j]):
                        return True
            c[i] = 0
    return False


cdef bint _mul_into(long long* a, long long* b, Py_ssize_t m, long long* out) noexcept nogil:
    # out has room for 2m - 1 entries and is overwritten
    cdef Py_ssize_t i, j
    cdef long long x, p
    for i in range(2 * m - 1):
        out[i] = 0
    for i in range(m):
        x = a[i]
        if x != 0:
            for j in range(m):
                if b[j] != 0:
                    if mul_ovf(x, b[j], &p):
                        return True
                    if add_ovf(out[i + j], p, &out[i + j]):
                        return True
    return False


cdef bint _substitute(long long* x, Py_ssize_t lx, long long k, Py_ssize_t n,
                      long long* phi, Py_ssize_t m, long long* acc) noexcept nogil:
    # acc has room for max(n, m) entries
    cdef Py_ssize_t j, size = n if n > m else m
    for j in range(size):
        acc[j] = 0
    for j in range(lx):
        if x[j] != 0:
            if add_ovf(acc[(j * k) % n], x[j], &acc[(j * k) % n]):
                return True
    return _reduce(acc, n, phi, m)


def reduce(c, phi):
    cdef Py_ssize_t m = len(phi) - 1, length = len(c)
    cdef Py_ssize_t size = length if length > m else m
    cdef long long* cb = NULL
    cdef long long* pb = NULL
    try:
        cb = _load(c, size)
        pb = _load(phi, m + 1)
        if _reduce(cb, length, pb, m):
            return None
        return _dump(cb, m)
    except OverflowError:
        return None
    finally:
        free(cb)
        free(pb)


def mulmod(a, b, phi):
    cdef Py_ssize_t m = len(phi) - 1
    cdef long long* ab = NULL
    cdef long long* bb = NULL
    cdef long long* pb = NULL
    cdef long long* out = NULL
    if len(a) != m or len(b) != m:
        raise ValueError("operands must have length deg(phi)")
    try:
        ab = _load(a, m)
        bb = _load(b, m)
        pb = _load(phi, m + 1)
        out = <long long*>calloc(2 * m, sizeof(long long))
        if _mul_into(ab, bb, m, out) or _reduce(out, 2 * m - 1, pb, m):
            return None
        return _dump(out, m)
    except OverflowError:
        return None
    finally:
        free(ab)
        free(bb)
        free(pb)
        free(out)


def substitute(x, long long k, Py_ssize_t n, phi):
    cdef Py_ssize_t m = len(phi) - 1, lx = len(x)
    cdef long long* xb = NULL
    cdef long long* pb = NULL
    cdef long long* acc = NULL
    k = ((k % n) + n) % n
    try:
        xb = _load(x, lx)
        pb = _load(phi, m + 1)
        acc = <long long*>calloc(n + m + 1, sizeof(long long))
        if _substitute(xb, lx, k, n, pb, m, acc):
            return None
        return _dump(acc, m)
    except OverflowError:
        return None
    finally:
        free(xb)
        free(pb)
        free(acc)


def orbit(x, Py_ssize_t n, phi):
    cdef Py_ssize_t m = len(phi) - 1, lx = len(x)
    cdef long long* xb = NULL
    cdef long long* pb = NULL
    cdef long long* acc = NULL
    cdef Py_ssize_t k
    cdef dict seen = {}
    try:
        xb = _load(x, lx)
        pb = _load(phi, m + 1)
        acc = <long long*>calloc(n + m + 1, sizeof(long long))
        for k in range(1, n + 1):
            if gcd(k, n) != 1:
                continue
            if _substitute(xb, lx, k, n, pb, m, acc):
                return None
            seen.setdefault(tuple([acc[i] for i in range(m)]), None)
        return [list(v) for v in seen]
    except OverflowError:
        return None
    finally:
        free(xb)
        free(pb)
        free(acc)


cdef bint _linear_step(long long* poly, Py_ssize_t rows, long long* negv, long long d,
                       long long* phi, Py_ssize_t m, long long* new,
                       long long* tmp) noexcept nogil:
    # new (rows + 1 rows) = poly * (d*X + negv)
    cdef Py_ssize_t i, j
    cdef long long p
    for i in range((rows + 1) * m):
        new[i] = 0
    for i in range(rows):
        for j in range(m):
            if poly[i * m + j] != 0:
                if mul_ovf(poly[i * m + j], d, &p):
                    return True
                if add_ovf(new[(i + 1) * m + j], p, &new[(i + 1) * m + j]):
                    return True
        if _mul_into(&poly[i * m], negv, m, tmp) or _reduce(tmp, 2 * m - 1, phi, m):
            return True
        for j in range(m):
            if add_ovf(new[i * m + j], tmp[j], &new[i * m + j]):
                return True
    return False


def orbit_product(conjugates, den, phi):
    cdef Py_ssize_t m = len(phi) - 1, deg = len(conjugates)
    cdef Py_ssize_t i, j, r
    cdef long long d
    cdef bint overflow = False
    cdef long long* pb = NULL
    cdef long long* conj = NULL
    cdef long long* poly = NULL
    cdef long long* new = NULL
    cdef long long* tmp = NULL
    cdef long long* swap
    try:
        d = den
        pb = _load(phi, m + 1)
        conj = <long long*>calloc(deg * m + 1, sizeof(long long))
        poly = <long long*>calloc((deg + 1) * m, sizeof(long long))
        new = <long long*>calloc((deg + 1) * m, sizeof(long long))
        tmp = <long long*>calloc(2 * m, sizeof(long long))
        if conj == NULL or poly == NULL or new == NULL or tmp == NULL:
            raise MemoryError()
        for r in range(deg):
            v = conjugates[r]
            for j in range(m):
                conj[r * m + j] = -v[j]
        poly[0] = 1
        with nogil:
            for r in range(deg):
                if _linear_step(poly, r + 1, &conj[r * m], d, pb, m, new, tmp):
                    overflow = True
                    break
                swap = poly
                poly = new
                new = swap
        if overflow:
            return None
        return [_dump(&poly[i * m], m) for i in range(deg + 1)]
    except OverflowError:
        return None
    finally:
        free(pb)
        free(conj)
        free(poly)
        free(new)
        free(tmp)


cdef long long _inv_mod(long long a, long long p) noexcept nogil:
    cdef long long t = 0, newt = 1, r = p, newr = a, q, tmp
    while newr != 0:
        q = r // newr
        tmp = t - q * newt
        t = newt
        newt = tmp
        tmp = r - q * newr
        r = newr
        newr = tmp
    if t < 0:
        t += p
    return t


cdef Py_ssize_t _trim(long long* f, Py_ssize_t length) noexcept nogil:
    while length > 0 and f[length - 1] == 0:
        length -= 1
    return length


def inverse_mod_p(a, phi, long long p):
    """Same contract as the Python kernel; p must be below 2**31."""
    cdef Py_ssize_t m = len(phi) - 1, i, j, shift
    cdef Py_ssize_t l0, l1, lr, lq, ls0, ls1, lns
    cdef long long c, inv_lead
    cdef long long* r0 = NULL
    cdef long long* r1 = NULL
    cdef long long* s0 = NULL
    cdef long long* s1 = NULL
    cdef long long* q = NULL
    cdef long long* swap
    cdef bint ok = True
    if p <= 1 or p >= 2147483648:
        raise ValueError("modulus must be in (1, 2**31)")
    try:
        r0 = <long long*>calloc(m + 2, sizeof(long long))
        r1 = <long long*>calloc(m + 2, sizeof(long long))
        s0 = <long long*>calloc(m + 2, sizeof(long long))
        s1 = <long long*>calloc(m + 2, sizeof(long long))
        q = <long long*>calloc(m + 2, sizeof(long long))
        if r0 == NULL or r1 == NULL or s0 == NULL or s1 == NULL or q == NULL:
            raise MemoryError()
        for i in range(m + 1):
            r0[i] = phi[i] % p
        for i in range(len(a)):
            r1[i] = a[i] % p
        l0 = _trim(r0, m + 1)
        l1 = _trim(r1, len(a))
        ls0 = 0
        s1[0] = 1
        ls1 = 1
        with nogil:
            while l1 > 1:
                # r0 <- r0 mod r1, quotient into q
                inv_lead = _inv_mod(r1[l1 - 1], p)
                lq = l0 - l1 + 1
                for i in range(lq):
                    q[i] = 0
                lr = l0
                while lr >= l1:
                    c = r0[lr - 1] * inv_lead % p
                    shift = lr - l1
                    q[shift] = c
                    if c != 0:
                        for j in range(l1):
                            r0[shift + j] = (r0[shift + j] - c * r1[j]) % p
                            if r0[shift + j] < 0:
                                r0[shift + j] += p
                    lr -= 1
                    lr = _trim(r0, lr)
                # s0 <- s0 - q * s1
                lns = lq + ls1 - 1
                if ls0 > lns:
                    lns = ls0
                for i in range(ls0, lns):
                    s0[i] = 0
                for i in range(lq):
                    if q[i] != 0:
                        for j in range(ls1):
                            s0[i + j] = (s0[i + j] - q[i] * s1[j]) % p
                            if s0[i + j] < 0:
                                s0[i + j] += p
                ls0 = _trim(s0, lns)
                # rotate: (r0, r1) <- (r1, r0 mod r1), (s0, s1) <- (s1, s0)
                swap = r0
                r0 = r1
                r1 = swap
                l0 = l1
                l1 = lr
                swap = s0
                s0 = s1
                s1 = swap
                i = ls0
                ls0 = ls1
                ls1 = i
            if l1 == 0:
                ok = False
            else:
                c = _inv_mod(r1[0], p)
                for i in range(ls1):
                    s1[i] = s1[i] * c % p
        if not ok:
            return None
        return [s1[i] if i < ls1 else 0 for i in range(m)]
    finally:
        free(r0)
        free(r1)
        free(s0)
        free(s1)
        free(q)



def orbit_product_split(conjugates, den, long long n, unsigned long long p,
                        unsigned long long g):
    """Same contract as the Python kernel; p must be below 2**31."""
    cdef Py_ssize_t deg = len(conjugates), m, i, j, r, ei, nu
    cdef unsigned long long d, s, acc
    cdef unsigned long long* powers = NULL
    cdef unsigned long long* vec = NULL
    cdef unsigned long long* first = NULL
    cdef unsigned long long* poly = NULL
    cdef long long* units = NULL
    cdef bint agree = True
    if p <= 1 or p >= 2147483648 or n < 1:
        raise ValueError("need n >= 1 and p in (1, 2**31)")
    m = len(conjugates[0]) if deg else 0
    try:
        powers = <unsigned long long*>calloc(n, sizeof(unsigned long long))
        vec = <unsigned long long*>calloc(deg * m + 1, sizeof(unsigned long long))
        first = <unsigned long long*>calloc(deg + 1, sizeof(unsigned long long))
        poly = <unsigned long long*>calloc(deg + 1, sizeof(unsigned long long))
        units = <long long*>calloc(n, sizeof(long long))
        if powers == NULL or vec == NULL or first == NULL or poly == NULL or units == NULL:
            raise MemoryError()
        for r in range(deg):
            v = conjugates[r]
            for j in range(m):
                vec[r * m + j] = v[j] % p
        d = den % p
        nu = 0
        for i in range(n):
            if gcd(i, n) == 1:
                units[nu] = i
                nu += 1
        with nogil:
            powers[0] = 1 % p
            for i in range(1, n):
                powers[i] = powers[i - 1] * g % p
            for ei in range(nu):
                for i in range(deg + 1):
                    poly[i] = 0
                poly[0] = 1
                for r in range(deg):
                    s = 0
                    for j in range(m):
                        acc = vec[r * m + j]
                        if acc != 0:
                            s = (s + acc * powers[(j * units[ei]) % n]) % p
                    # poly *= (d*X - s), highest coefficient first
                    for i in range(r + 1, 0, -1):
                        poly[i] = (poly[i] * (p - s) + poly[i - 1] * d) % p
                    poly[0] = poly[0] * (p - s) % p
                if ei == 0:
                    for i in range(deg + 1):
                        first[i] = poly[i]
                else:
                    for i in range(deg + 1):
                        if poly[i] != first[i]:
                            agree = False
                            break
                    if not agree:
                        break
        return [first[i] for i in range(deg + 1)], agree
    finally:
        free(powers)
        free(vec)
        free(first)
        free(poly)
        free(units)
