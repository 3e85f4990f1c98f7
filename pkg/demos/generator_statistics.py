"""Check the random generator against its own math.

Each of the m sets includes each of the n elements with probability q, so a
raw draw is feasible with probability (1 - (1-q)^m)^n and the average set
cardinality is q*n.  Sample 20,000 raw draws and compare.
"""

import math

from scpkit import (
    FeasibilityPolicy,
    GeneratorConfig,
    feasibility_probability,
    generate_instance,
    is_feasible,
)

config = GeneratorConfig(
    n=100, m=10, q=0.3, seed=20240817, feasibility_policy=FeasibilityPolicy.KEEP_RAW
)

draws = 20_000
feasible = 0
cardinality_sum = 0
for i in range(draws):
    inst = generate_instance(config, i)
    feasible += is_feasible(inst)
    cardinality_sum += sum(len(s) for s in inst.sets)

rate = feasible / draws
predicted = feasibility_probability(config)
print(f"feasible draws: {feasible}/{draws} = {rate:.4f}")
print(f"closed form   : (1 - (1-q)^m)^n = {predicted:.4f}")

mean_card = cardinality_sum / (draws * config.m)
se = math.sqrt(config.n * config.q * (1 - config.q) / (draws * config.m))
print(f"mean set cardinality: {mean_card:.3f}  (expected {config.q * config.n:.1f}, "
      f"standard error {se:.3f})")

# the default policy redraws until feasible, so every instance covers the universe
strict = GeneratorConfig(n=100, m=10, q=0.3, seed=20240817)
assert all(is_feasible(generate_instance(strict, i)) for i in range(200))
print("reject-resample policy: 200/200 feasible")
