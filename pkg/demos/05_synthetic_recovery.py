"""
Planting a known answer
=======================

The generator writes tweets whose positive words favour candidate 1
with a chosen probability. The pipeline should get that number back,
and an independent naive implementation should agree to the last bit.
"""

import time

from tweetcast import afinn111
from tweetcast.synth import SynthSpec, generate_corpus, main_pipeline, reference_pipeline

lex = afinn111()

for n in (1_000, 10_000, 100_000):
    spec = SynthSpec(planted_e=(0.7, 0.3), n_tweets=n, seed=1)
    text = generate_corpus(spec, lex)
    t0 = time.perf_counter()
    e = main_pipeline(text, lex, spec.candidate_specs())
    dt = time.perf_counter() - t0
    ref = reference_pipeline(text, lex, spec.candidate_specs())
    print(f"n={n:>7}  E_1={e[1]:.4f}  same as reference: {ref == e.e}  {dt:.2f}s")

# other estimators of E from the same corpus
spec = SynthSpec(planted_e=(0.7, 0.3), n_tweets=20_000, seed=2)
text = generate_corpus(spec, lex)
for strategy in ("positive-share", "net-share", "volume-share"):
    print(strategy, round(main_pipeline(text, lex, spec.candidate_specs(), strategy)[1], 4))
