"""Read a set-covering instance in the OR-Library text layout.

That layout is row-major: after `rows cols` and the column costs come, for
each row, the count of columns covering it and their 1-based indices.  The
parser transposes this into the column-major view the solvers want (each
set = the rows its column covers) and treats every cost as 1.
"""

from scpkit import big_step_greedy, classical_greedy, parse_orlib_scp, serialize_instance

TEXT = """\
5 4
1 1 1 1
2 1 2
2 2 3
2 3 4
2 1 4
1 2
"""

instance = parse_orlib_scp(TEXT)
print(f"{instance.m} sets over {instance.n} elements")
for i, s in enumerate(instance.sets):
    print(f"  set {i}: covers rows {tuple(s.elements())}")

greedy_size = classical_greedy(instance)[0].size
bigstep = big_step_greedy(instance, 2)[0]
print(f"greedy cover size {greedy_size}, big-step p=2 size {bigstep.size}: {bigstep.chosen}")

# round-trip through the native format: "n m" header, then one line per set
print()
print("native serialization:")
print(serialize_instance(instance), end="")
