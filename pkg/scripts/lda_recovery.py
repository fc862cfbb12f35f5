"""Topic recovery on synthetic two-topic corpora across generator and sampler seeds.

    python scripts/lda_recovery.py --corpus-seeds 10 --fit-seeds 3 --alpha 0.1

Each topic owns a disjoint block of the vocabulary with ten heavy words. A
run's recovery is the fraction of those ten words found in the fitted top
ten, under the best matching of fitted to generator topics (worst topic
counts). Prints one CSV row per run, then the summary.
"""

import argparse
import itertools
import sys
import time

import numpy as np

from interview_sentiment.topics import CorpusMatrix, fit_lda, top_words


def two_topic_corpus(seed, n_docs=200, doc_len=50, block=30, concentration=0.3):
    rng = np.random.default_rng(seed)
    weights = np.concatenate([np.linspace(10, 6, 10), np.ones(block - 10)])
    phi = np.zeros((2, 2 * block))
    phi[0, :block] = weights / weights.sum()
    phi[1, block:] = weights / weights.sum()
    docs = []
    for _ in range(n_docs):
        theta = rng.dirichlet([concentration, concentration])
        z = rng.choice(2, size=doc_len, p=theta)
        docs.append(tuple(int(rng.choice(2 * block, p=phi[k])) for k in z))
    vocab = tuple(f"w{i}" for i in range(2 * block))
    heavy = [set(range(10)), set(range(block, block + 10))]
    return CorpusMatrix(vocab, tuple(docs), tuple(("syn", i) for i in range(n_docs))), heavy


def recovery(model, heavy, n=10):
    fitted = [set(top_words(model, k, n)) for k in range(model.K)]
    return max(
        min(len(heavy[g] & fitted[k]) / n for g, k in enumerate(perm))
        for perm in itertools.permutations(range(model.K))
    )


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--corpus-seeds", type=int, default=10)
    ap.add_argument("--fit-seeds", type=int, default=3)
    ap.add_argument("--alpha", type=float, default=0.1)
    ap.add_argument("--beta", type=float, default=0.01)
    ap.add_argument("--iterations", type=int, default=500)
    ap.add_argument("--docs", type=int, default=200)
    args = ap.parse_args(argv)

    print("corpus_seed,fit_seed,recovery,perplexity,seconds")
    scores = []
    for cs in range(args.corpus_seeds):
        corpus, heavy = two_topic_corpus(cs, n_docs=args.docs)
        for fs in range(args.fit_seeds):
            t0 = time.perf_counter()
            m = fit_lda(corpus, K=2, alpha=args.alpha, beta=args.beta, iterations=args.iterations, seed=fs)
            elapsed = time.perf_counter() - t0
            r = recovery(m, heavy)
            scores.append(r)
            print(f"{cs},{fs},{r:.2f},{m.perplexity():.3f},{elapsed:.3f}")
    scores = np.array(scores)
    print(
        f"# runs={len(scores)} mean={scores.mean():.3f} min={scores.min():.2f} "
        f"share>=0.9={np.mean(scores >= 0.9):.3f}",
        file=sys.stderr,
    )


if __name__ == "__main__":
    main()
