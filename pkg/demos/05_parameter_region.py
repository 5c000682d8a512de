"""Where are the zeros guaranteed to be real?

The region W_i in the (1/alpha, beta) plane is built from W_b by the maps
A, B and C.  Membership comes with a witness that can be replayed.
"""

# %%
from mlradii import PlanePoint, in_wi, wb_beta_intervals

print("W_b sections at y = 1/3:", wb_beta_intervals(1 / 3))

# %%
for x, beta in [(1 / 3, 0.75), (1 / 6, 0.75), (1 / 3, 0.1), (1 / 12, 3.3), (0.5, 2.0), (0.6, 1.0)]:
    v = in_wi(PlanePoint(x, beta))
    line = f"({x:.4f}, {beta}): {v.status.value}"
    if v.seed is not None:
        back = v.replay()
        line += (f"  seed ({v.seed.x:.4f}, {v.seed.beta:.4f}) word {''.join(t.value for t in v.witness) or '-'}"
                 f"  replays to ({back.x:.4f}, {back.beta:.4f})")
    print(line)

# %% A coarse picture of one band: '#' member, '.' not, '?' boundary
symbols = {"member": "#", "nonmember": ".", "boundary": "?"}
for beta in [3.75 - 0.25 * i for i in range(15)]:
    row = "".join(symbols[in_wi(PlanePoint(0.26 + 0.0048 * j, beta)).status.value] for j in range(50))
    print(f"{beta:5.2f} {row}")
