"""
Falsification runs and the negative control
===========================================

Run the bundled corpus at a few tolerances. The true identities hold at
round-off level, so they only start failing once epsilon drops below
about 1e-13; the negative control fails on every trial at any epsilon.
"""

from fuhrmann import SamplerConfig, parse, run_trials
from fuhrmann.cli import CORPUS, corpus_source

cfg = SamplerConfig(seed=42, trials=1000)
for name in CORPUS:
    script = parse(corpus_source(name))
    report = run_trials(script, cfg, 1e-9, name=name)
    worst = max(r.max_residual for r in report.assertions)
    print(f"{name:24s} expect={report.expect:4s} verdict={report.verdict:4s} "
          f"failures={report.failures:5d} worst residual={worst:.2e}")

script = parse(corpus_source("lemma1.geo"))
for eps in (1e-9, 1e-12, 1e-13, 1e-14, 1e-15):
    report = run_trials(script, cfg, eps)
    print(f"lemma1 at epsilon {eps:.0e}: {report.failures} failing assertion-trials")
