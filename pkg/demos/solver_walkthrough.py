"""
Classical greedy vs big-step greedy on a tiny instance
======================================================

Ten elements a..j (indices 0..9), five candidate sets.  The classical rule
grabs the big six-element set first and pays for it later; picking pairs of
sets jointly sees the two five-element sets that split the universe.
"""

from scpkit import Instance, big_step_greedy, classical_greedy

instance = Instance.from_memberships(
    10,
    [
        [0, 1, 2, 3, 4, 5],   # S1 = {a,b,c,d,e,f}
        [0, 1, 2, 6, 7],      # S2 = {a,b,c,g,h}
        [3, 4, 5, 8, 9],      # S3 = {d,e,f,i,j}
        [6, 7, 8],            # S4 = {g,h,i}
        [9],                  # S5 = {j}
    ],
)

cover, trace = classical_greedy(instance)
print("classical greedy")
for t, step in enumerate(trace.steps, start=1):
    print(f"  step {t}: set {step.chosen[0]} adds {step.newly_covered} new elements"
          f" ({step.candidates_evaluated} candidates looked at)")
print(f"  cover size {cover.size}: indices {cover.chosen}")

print()

cover2, trace2 = big_step_greedy(instance, p=2)
print("big-step greedy, p=2")
for t, step in enumerate(trace2.steps, start=1):
    print(f"  step {t}: sets {step.chosen} add {step.newly_covered} new elements"
          f" ({step.candidates_evaluated} candidates looked at)")
print(f"  cover size {cover2.size}: indices {cover2.chosen}")

# p=1 is exactly the classical rule, trace and all
cover1, _ = big_step_greedy(instance, p=1)
assert cover1.chosen == cover.chosen
print()
print("big-step with p=1 picked the same cover as classical greedy:", cover1.chosen)
