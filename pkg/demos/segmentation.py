#!/usr/bin/env python3
# Segmented least-squares regression three ways: regularized,
# fixed segment count, and minimum segment length.  The solver is the
# polymorphic cover recurrence run in a min-plus score-and-witness
# semiring, so breakpoints come out of the forward pass directly.

import numpy as np

import semiring_dp as sd

rng = np.random.default_rng(11)
n = 240
x = np.arange(1, n + 1, dtype=float)
truth = np.where(x <= 80, 0.1 * x, np.where(x <= 160, 20 - 0.15 * (x - 80), 8 + 0.05 * (x - 160)))
y = truth + rng.normal(0, 1.2, n)
ts = sd.TimeSeries(y)

print(f"synthetic series: {n} samples, true breakpoints at 80 and 160\n")


def show(title, cost, segments):
    marks = ", ".join(f"[{i}..{j}]" for i, j in segments)
    print(f"{title}\n  cost {cost:.2f}, segments {marks}\n")


# 1. per-segment penalty: one knob trades fit against segment count
for lam in (0.0, 25.0, 400.0):
    model = sd.SegmentCostModel(kind="linear", regularization=lam)
    cost, segments = sd.segment_series(ts, model)
    print(f"regularization {lam:>6.1f}: {len(segments):>3} segments")
print()

# 2. fixing the count directly is usually the more predictable control
model = sd.SegmentCostModel(kind="linear")
cost, segments = sd.segment_series(ts, model, count=3)
show("exactly 3 segments:", cost, segments)

# 3. or require every segment to span at least 60 samples
cost, segments = sd.segment_series(ts, model, min_length=60)
show("every segment at least 60 samples:", cost, segments)

# counting covers instead of optimizing them is the same recurrence in
# the counting semiring
covers = sd.segment_opt(sd.SegmentationProblem(12, lambda i, j: 1), sd.counting_semiring())
exactly4 = sd.segment_fixed_count(
    sd.SegmentationProblem(12, lambda i, j: 1), 4, 4, sd.counting_semiring()
)
print(f"a 12-sample series admits {covers} covers, {exactly4} of them with 4 segments")
