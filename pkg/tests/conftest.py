from hypothesis import settings

from dposet.linalg import identity_matrix, mat_mul, mat_transpose

settings.register_profile("exact", deadline=None, max_examples=60)
settings.load_profile("exact")


def random_unimodular_symmetric(rng, size):
    """Conjugate a random certificate-shaped block matrix by elementary ops."""
    blocks = []
    total = 0
    while total < size:
        if size - total >= 2 and rng.random() < 0.4:
            blocks.append("hyperbolic")
            total += 2
        else:
            blocks.append(rng.choice(["plus_one", "minus_one"]))
            total += 1
    D = [[0] * size for _ in range(size)]
    k = 0
    for b in blocks:
        if b == "hyperbolic":
            D[k][k + 1] = D[k + 1][k] = 1
            k += 2
        else:
            D[k][k] = 1 if b == "plus_one" else -1
            k += 1
    U = identity_matrix(size)
    if size >= 2:
        for _ in range(2 * size):
            i, j = rng.sample(range(size), 2)
            c = rng.choice((-1, 1))
            for col in range(size):
                U[i][col] += c * U[j][col]
    return mat_mul(mat_mul(U, D), mat_transpose(U))
