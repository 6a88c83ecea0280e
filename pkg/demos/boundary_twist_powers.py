"""How the boundary twists arise inside the generator group.

Instant to run: everything here is closed-form.  Shows the handedness
gate, the chain relation, the three power realizations, and the
handle-flip identity satisfied by the slide's homological shadow.
"""

import numpy as np

from goeritz import (validate_library, power_realizations, half_twist, swap,
                     conjugated_half_twist, evaluate_expression,
                     generator_env, Toggles, slide_profile)
from goeritz.aut import model_power
from goeritz.homology import abelianization_matrix

rep = validate_library()
print("handedness gate: accepted sign %d (unique: %s)"
      % (rep["accepted_sign"], rep["unique"]))
print("chain exponent: (T_a1 T_b1)^6 = T_d1^%+d"
      % rep["per_sign"][rep["accepted_sign"]]["chain_exp"])

rec = power_realizations()
print("\npower realizations:")
print("  D_omega^2  = T_d1^%+d" % rec["half_sq_d1"])
print("  D_omega'^2 = T_d2^%+d" % rec["conj_half_sq_d2"])
x, y, z = rec["swap_sq_bd_d1_d2"]
print("  D_eta12^2  = T_bd^%+d T_d1^%+d T_d2^%+d" % (x, y, z))

from goeritz.words import format_word

env = generator_env(None, None, Toggles())
for expr in ("D_omega^2", "T_d1"):
    m = evaluate_expression(expr, env)
    print("\n%s sends a1 to %s" % (expr, format_word(m.forward.images[1])))

# the slide's shadow M and the handle flip W = shadow(D_omega'^3)
# satisfy (W M^-1)^2 = I -- the homological fingerprint of a slide
M = slide_profile().shadow_matrix()
W = abelianization_matrix(model_power(env["D_omega'"], 3).forward)
P = W @ np.linalg.inv(M).astype(np.int64)
print("\nhandle flip W:\n%s" % W)
print("slide shadow M:\n%s" % M)
print("(W M^-1)^2 == I:", np.array_equal(P @ P, np.eye(4, dtype=np.int64)))
