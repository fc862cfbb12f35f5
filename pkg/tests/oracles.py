"""Independent reference implementations used as test oracles.

Nothing here imports the code under test.
"""

import itertools
import math
import random

NEG = -0.74
DECAY = 0.95
CAPS = 0.733
BANG = 0.292


def brute_force_compound(tokens, exclamations, valence, negators, boosters):
    """Walk ``(word, is_caps)`` tokens and apply the scoring rules literally."""
    total = 0.0
    for i, (word, caps) in enumerate(tokens):
        if word not in valence:
            continue
        v = valence[word]
        for d in (1, 2, 3):
            if i - d >= 0 and tokens[i - d][0] in negators:
                v = v * NEG
                break
        for d in (1, 2, 3):
            if i - d >= 0 and tokens[i - d][0] in boosters:
                step = boosters[tokens[i - d][0]] * DECAY ** (d - 1)
                if v > 0:
                    v = v + step
                elif v < 0:
                    v = v - step
        if caps:
            if v > 0:
                v = v + CAPS
            elif v < 0:
                v = v - CAPS
        total = total + v
    bangs = min(exclamations, 3)
    if total > 0:
        total = total + BANG * bangs
    elif total < 0:
        total = total - BANG * bangs
    return total / math.sqrt(total * total + 15)


def toy_lexicon(seed=0, n_valence=40, n_negators=5, n_boosters=5):
    """A 50-entry lexicon over made-up alphabetic words."""
    rng = random.Random(seed)
    words = iter(sorted({"".join(rng.choice("bcdfghjklmnpqrstvwz") + rng.choice("aeiou") for _ in range(3)) for _ in range(400)}))
    valence = {next(words): round(rng.uniform(-4, 4), 2) for _ in range(n_valence)}
    negators = {next(words) for _ in range(n_negators)}
    boosters = {next(words): round(rng.choice([1, -1]) * rng.uniform(0.1, 0.4), 3) for _ in range(n_boosters)}
    fillers = [next(words) for _ in range(20)]
    return valence, negators, boosters, fillers


def random_sequence(rng, valence, negators, boosters, fillers, max_len=30):
    """Random text plus the structured tokens the oracle needs."""
    pool = list(valence) + list(negators) + list(boosters) + list(fillers)
    n = rng.randint(0, max_len)
    tokens, words = [], []
    for _ in range(n):
        w = rng.choice(pool)
        caps = rng.random() < 0.15
        surface = w.upper() if caps else w
        if rng.random() < 0.1:
            surface += rng.choice([",", ".", ";", "?"])
        tokens.append((w, caps))
        words.append(surface)
    bangs = rng.choice([0, 0, 0, 1, 2, 3, 5]) if words else 0
    text = " ".join(words) + "!" * bangs
    return text, tokens, bangs


def lda_log_joint(docs, z, K, V, alpha, beta):
    """log p(w, z) for LDA with symmetric priors, from count statistics."""
    lg = math.lgamma
    n_dk = [[0] * K for _ in docs]
    n_kw = [[0] * V for _ in range(K)]
    pos = 0
    for d, doc in enumerate(docs):
        for w in doc:
            n_dk[d][z[pos]] += 1
            n_kw[z[pos]][w] += 1
            pos += 1
    total = 0.0
    for d, doc in enumerate(docs):
        total += lg(K * alpha) - lg(K * alpha + len(doc))
        total += sum(lg(n_dk[d][k] + alpha) - lg(alpha) for k in range(K))
    for k in range(K):
        n_k = sum(n_kw[k])
        total += lg(V * beta) - lg(V * beta + n_k)
        total += sum(lg(n_kw[k][w] + beta) - lg(beta) for w in range(V))
    return total


def lda_exact_posterior(docs, K, V, alpha, beta):
    """Exact p(z | w) by enumerating every topic assignment."""
    n = sum(len(d) for d in docs)
    states = list(itertools.product(range(K), repeat=n))
    logs = [lda_log_joint(docs, z, K, V, alpha, beta) for z in states]
    top = max(logs)
    weights = [math.exp(x - top) for x in logs]
    norm = sum(weights)
    return {z: w / norm for z, w in zip(states, weights)}
