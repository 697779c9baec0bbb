"""Pure-Python square-detection kernels.

Mirrors ``_ckernels.pyx`` function for function; used when the compiled
extension is unavailable or disabled. Words are ``bytes`` and positions are
0-based here; the public wrappers in :mod:`circsqf.words` translate.
"""


def find_square(w):
    n = len(w)
    for i in range(n - 1):
        for p in range(1, (n - i) // 2 + 1):
            if w[i:i + p] == w[i + p:i + 2 * p]:
                return i, p
    return None


def find_circular_square(w):
    n = len(w)
    d = w + w
    for i in range(n):
        for p in range(1, n // 2 + 1):
            if d[i:i + p] == d[i + p:i + 2 * p]:
                return i, p
    return None


def has_square_suffix(w):
    n = len(w)
    for p in range(1, n // 2 + 1):
        if w[n - p:] == w[n - 2 * p:n - p]:
            return True
    return False


def square_free_words(n, alphabet=b"abc"):
    """All square-free words of length ``n`` over ``alphabet``, lexicographic."""
    if n == 0:
        return [b""]
    out = []
    letters = [alphabet[i:i + 1] for i in range(len(alphabet))]

    def extend(word):
        if len(word) == n:
            out.append(word)
            return
        for x in letters:
            cand = word + x
            if not has_square_suffix(cand):
                extend(cand)

    for x in letters:
        extend(x)
    return out
