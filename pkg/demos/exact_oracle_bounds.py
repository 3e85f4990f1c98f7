import math

from scpkit import GeneratorConfig, generate_instance
from scpkit.solvers import big_step_greedy, classical_greedy, exact_min_cover

# exact_min_cover proves the optimum by iterative deepening, so it is only
# for small m; here it sandwiches both heuristics on 60 instances
config = GeneratorConfig(n=100, m=15, q=0.4, seed=5)

h_n = sum(1.0 / k for k in range(1, 101))  # greedy's guarantee factor H(100)
worst_ratio = 0.0
histogram = {}
for i in range(60):
    inst = generate_instance(config, i)
    opt = exact_min_cover(inst).size
    g = classical_greedy(inst)[0].size
    b = big_step_greedy(inst, 2)[0].size
    assert opt <= b and opt <= g  # oracle is a true lower bound
    assert g <= math.ceil(h_n * opt)
    worst_ratio = max(worst_ratio, g / opt)
    histogram[(opt, g, b)] = histogram.get((opt, g, b), 0) + 1

print("(optimum, greedy, big-step p=2) -> instances")
for key in sorted(histogram):
    print(f"  {key} -> {histogram[key]}")
print(f"worst greedy/optimum ratio seen: {worst_ratio:.3f}  (guarantee: {h_n:.3f})")
