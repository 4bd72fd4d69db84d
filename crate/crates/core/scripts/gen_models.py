#!/usr/bin/env python3
"""Generate the shipped .grp model files and their fingerprint sidecars.

Fingerprints are computed here by brute-force closure, independently of the
Rust implementation, and frozen as text next to each model.
"""
import itertools
import os
import sys

HERE = os.path.dirname(os.path.abspath(__file__))
DATA = os.path.join(HERE, "..", "data")


def compose(p, q):
    # apply p first, then q
    return tuple(q[p[i]] for i in range(len(p)))


def inverse(p):
    r = [0] * len(p)
    for i, j in enumerate(p):
        r[j] = i
    return tuple(r)


def from_cycles(cycles, n):
    img = list(range(n))
    for c in cycles:
        for a, b in zip(c, c[1:] + c[:1]):
            img[a - 1] = b - 1
    return tuple(img)


def cycles_text(p):
    seen = [False] * len(p)
    out = []
    for i in range(len(p)):
        if seen[i] or p[i] == i:
            seen[i] = True
            continue
        c = []
        j = i
        while not seen[j]:
            seen[j] = True
            c.append(j + 1)
            j = p[j]
        out.append("(" + " ".join(map(str, c)) + ")")
    return "".join(out) if out else "()"


def closure(gens):
    n = len(gens[0])
    e = tuple(range(n))
    seen = {e}
    frontier = [e]
    while frontier:
        nxt = []
        for x in frontier:
            for s in gens:
                y = compose(x, s)
                if y not in seen:
                    seen.add(y)
                    nxt.append(y)
        frontier = nxt
    return seen


def order_of(p):
    e = tuple(range(len(p)))
    k, q = 1, p
    while q != e:
        q = compose(q, p)
        k += 1
    return k


def fingerprint(gens):
    elems = closure(gens)
    orders = {}
    for x in elems:
        o = order_of(x)
        orders[o] = orders.get(o, 0) + 1
    abelian = all(compose(a, b) == compose(b, a) for a in gens for b in gens)
    center = sum(1 for x in elems if all(compose(x, s) == compose(s, x) for s in gens))
    # derived subgroup: closure of all commutators of generator pairs, then
    # closed under conjugation by the generators
    n = len(gens[0])
    e = tuple(range(n))
    comms = set()
    for a in gens:
        for b in gens:
            comms.add(compose(compose(inverse(a), inverse(b)), compose(a, b)))
    comms.discard(e)
    derived = {e}
    if comms:
        derived = closure(sorted(comms))
        while True:
            extra = set()
            for d in derived:
                for s in gens:
                    c = compose(compose(inverse(s), d), s)
                    if c not in derived:
                        extra.add(c)
            if not extra:
                break
            derived = closure(sorted(derived | extra))
    return {
        "order": len(elems),
        "abelian": abelian,
        "center": center,
        "derived": len(derived),
        "orders": dict(sorted(orders.items())),
    }


def write_grp(path, n, gens, comment):
    with open(path, "w") as f:
        for line in comment:
            f.write("# " + line + "\n")
        f.write("degree %d\n" % n)
        for g in gens:
            f.write("gen " + cycles_text(g) + "\n")


def write_fp(path, fp, name):
    with open(path, "w") as f:
        f.write("# %s: profile by brute-force enumeration\n" % name)
        f.write("order %d\n" % fp["order"])
        f.write("abelian %s\n" % ("true" if fp["abelian"] else "false"))
        f.write("center %d\n" % fp["center"])
        f.write("derived %d\n" % fp["derived"])
        f.write("orders " + " ".join("%d:%d" % kv for kv in fp["orders"].items()) + "\n")


# --- GF(4) affine groups on 16 points -------------------------------------
# GF(4) = {0, 1, w, w^2} encoded 0, 1, 2, 3 with w^2 = w + 1.
ADD4 = [[a ^ b for b in range(4)] for a in range(4)]
LOG = {1: 0, 2: 1, 3: 2}
EXP = [1, 2, 3]


def mul4(a, b):
    if a == 0 or b == 0:
        return 0
    return EXP[(LOG[a] + LOG[b]) % 3]


def frob4(a):
    return mul4(a, a)


def pt(x, y):
    return 4 * x + y


def affine(f):
    img = [0] * 16
    for x in range(4):
        for y in range(4):
            u, v = f(x, y)
            img[pt(x, y)] = pt(u, v)
    return tuple(img)


def matrix(a, b, c, d):
    return affine(lambda x, y: (ADD4[mul4(a, x)][mul4(b, y)], ADD4[mul4(c, x)][mul4(d, y)]))


TRANSLATIONS = [affine(lambda x, y, t=t: (ADD4[x][t], y)) for t in (1, 2)] + [
    affine(lambda x, y, t=t: (x, ADD4[y][t])) for t in (1, 2)
]
SL24 = [matrix(1, 1, 0, 1), matrix(1, 2, 0, 1), matrix(1, 0, 1, 1), matrix(1, 0, 2, 1)]
DIAG = [matrix(2, 0, 0, 1)]
FROB = [affine(lambda x, y: (frob4(x), frob4(y)))]


# --- PSL(2,25) on the projective line ---------------------------------------
# GF(25) = GF(5)[t] / (t^2 - 2); element a + b t encoded as 5 b + a; infinity = 25.
def f25_add(p, q):
    return ((p % 5 + q % 5) % 5) + 5 * ((p // 5 + q // 5) % 5)


def f25_mul(p, q):
    a, b = p % 5, p // 5
    c, d = q % 5, q // 5
    re = (a * c + 2 * b * d) % 5
    im = (a * d + b * c) % 5
    return re + 5 * im


def f25_inv(p):
    for q in range(1, 25):
        if f25_mul(p, q) == 1:
            return q
    raise ValueError


def f25_neg(p):
    return ((-(p % 5)) % 5) + 5 * ((-(p // 5)) % 5)


def f25_primitive():
    for z in range(2, 25):
        x, k = z, 1
        while x != 1:
            x = f25_mul(x, z)
            k += 1
        if k == 24:
            return z
    raise ValueError


def psl2_25():
    inf = 25
    z = f25_primitive()
    sq = f25_mul(z, z)
    shift = tuple(inf if p == inf else f25_add(p, 1) for p in range(26))
    scale = tuple(inf if p == inf else f25_mul(p, sq) for p in range(26))

    def neg_inv(p):
        if p == inf:
            return 0
        if p == 0:
            return inf
        return f25_neg(f25_inv(p))

    flip = tuple(neg_inv(p) for p in range(26))
    return [shift, scale, flip]


def main():
    models = {
        "z5": (5, [[(1, 2, 3, 4, 5)]], "Z5"),
        "d5": (5, [[(1, 2, 3, 4, 5)], [(2, 5), (3, 4)]], "D5"),
        "d10": (7, [[(1, 2, 3, 4, 5), (6, 7)], [(2, 5), (3, 4)]], "D10"),
        "f20": (5, [[(1, 2, 3, 4, 5)], [(2, 3, 5, 4)]], "F20"),
        "f20xz2": (7, [[(1, 2, 3, 4, 5)], [(2, 3, 5, 4)], [(6, 7)]], "F20xZ2"),
        "f20xz4": (9, [[(1, 2, 3, 4, 5)], [(2, 3, 5, 4)], [(6, 7, 8, 9)]], "F20xZ4"),
        "a5": (5, [[(1, 2, 3, 4, 5)], [(1, 2, 3)]], "A5"),
        "s5": (5, [[(1, 2, 3, 4, 5)], [(1, 2)]], "S5"),
        "a4xa5": (9, [[(1, 2, 3)], [(1, 2), (3, 4)], [(5, 6, 7, 8, 9)], [(5, 6, 7)]], "A4xA5"),
        "a4xa5_2": (9, [[(1, 2, 3)], [(1, 2), (3, 4)], [(5, 6, 7, 8, 9)], [(5, 6, 7)], [(1, 2), (5, 6)]], "(A4xA5):Z2"),
        "s4xs5": (9, [[(1, 2, 3, 4)], [(1, 2)], [(5, 6, 7, 8, 9)], [(5, 6)]], "S4xS5"),
    }
    for key, (n, gens, name) in models.items():
        perms = [from_cycles(c, n) for c in gens]
        fp = fingerprint(perms)
        write_grp(os.path.join(DATA, "models", key + ".grp"), n, perms, ["stabilizer model " + name])
        write_fp(os.path.join(DATA, "models", key + ".fp"), fp, name)
        print(key, fp["order"], file=sys.stderr)

    affine_models = {
        "asl24": (TRANSLATIONS + SL24, "ASL(2,4)"),
        "agl24": (TRANSLATIONS + SL24 + DIAG, "AGL(2,4)"),
        "asigmal24": (TRANSLATIONS + SL24 + FROB, "ASigmaL(2,4)"),
        "agammal24": (TRANSLATIONS + SL24 + DIAG + FROB, "AGammaL(2,4)"),
    }
    for key, (perms, name) in affine_models.items():
        fp = fingerprint(perms)
        write_grp(
            os.path.join(DATA, "models", key + ".grp"),
            16,
            perms,
            ["stabilizer model " + name, "points: (x, y) in GF(4)^2 numbered 4x + y + 1, GF(4) = {0, 1, w, w^2}"],
        )
        write_fp(os.path.join(DATA, "models", key + ".fp"), fp, name)
        print(key, fp["order"], file=sys.stderr)

    psl = psl2_25()
    assert len(closure(psl)) == 7800
    write_grp(
        os.path.join(DATA, "groups", "psl2_25.grp"),
        26,
        psl,
        ["PSL(2,25) on the projective line over GF(25)", "z -> z+1, z -> c z (c a nonzero square), z -> -1/z; infinity is point 26"],
    )
    m11 = [from_cycles([(2, 10), (4, 11), (5, 7), (8, 9)], 11), from_cycles([(1, 4, 3, 8), (2, 5, 6, 9)], 11)]
    assert len(closure(m11)) == 7920
    write_grp(os.path.join(DATA, "groups", "m11.grp"), 11, m11, ["M11, standard generators a (order 2), b (order 4)"])


if __name__ == "__main__":
    main()
