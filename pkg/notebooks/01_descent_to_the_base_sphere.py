# %% [markdown]
# # Walking a reducing sphere back to the base one
#
# Start from a group element, push the base sphere P through it,
# then undo it one band at a time.  Each band meets P in four points and
# meets the current sphere in fewer points than P does.

# %%
from goeritz import apply_word, base_intersection, path_to_base, reduce_step
from goeritz.factor import identify_edge_word
from goeritz.goeritz_action import inverse_word

word = "dgbbdBd"
q = apply_word(word)
print("word:", word)
print("P.Q =", base_intersection(q))
print("plus side: ", q.plus)
print("minus side:", q.minus)

# %% [markdown]
# Each step: band c to get R, read off R = beta^n gamma^g delta(P), and pull
# the whole picture back by that edge word.

# %%
current = q
while not current.is_base:
    r, cert = reduce_step(current)
    step = identify_edge_word(r).word()
    print(f"P.Q = {base_intersection(current):3d}   R.Q = {cert['r_dot_q']:3d} "
          f"(bound {cert['bound_r_dot_q']})   edge word {step}")
    current = apply_word(inverse_word(step), current)

# %%
found = path_to_base(q)
print("path_to_base:", found)
print("same sphere:", apply_word(found) == q)
