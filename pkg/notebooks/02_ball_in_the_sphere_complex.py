# %% [markdown]
# # A small ball in the complex of reducing spheres
#
# Vertices are reducing spheres, edges join spheres meeting in four points.
# The ball is truncated twice over: by radius and by how many beta twists
# are scanned at each vertex.

# %%
from collections import Counter
from pathlib import Path

from goeritz import build_ball, export, verify_local_structure

ball = build_ball(radius=2, n_range=6)
print("vertices by depth:", sorted(Counter(v.depth for v in ball.vertices).items()))
print("edges:", len(ball.edges), " 2-simplices:", len(ball.simplices))

# %%
# pairing with P grows with depth
by_depth = {}
for v in ball.vertices:
    by_depth.setdefault(v.depth, Counter())[v.diagram.base_intersection] += 1
for depth, counts in sorted(by_depth.items()):
    print(depth, dict(sorted(counts.items())))

# %%
print(verify_local_structure(ball).summary())

# %%
# radius 1 is small enough to draw with graphviz: dot -Tpng ball1.dot
Path("ball1.dot").write_bytes(export(build_ball(1), "dot"))
print("wrote ball1.dot")
