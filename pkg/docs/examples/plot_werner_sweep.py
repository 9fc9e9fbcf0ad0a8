"""
Werner states
=============

The modified relative entropy of entanglement of the Werner states, compared
with the entanglement of formation.
"""

# Author: Georgios Douzas <gdouzas@icloud.com>
# Licence: MIT

import numpy as np
import pandas as pd

from skentangle.closedform import werner_mre
from skentangle.decomp import mre_of_decomposition, werner_ensemble
from skentangle.measures import ef_wootters, ppt_separable
from skentangle.states import werner

# %%
# Closed form and ensemble value
# ------------------------------
#
# The closed form is compared with the value of the family ensemble.

rows = []
for F in np.linspace(0.0, 1.0, 21):
    rho = werner(F)
    rows.append(
        {
            'F': F,
            'mre_closed': werner_mre(F),
            'mre_pipeline': mre_of_decomposition(rho, werner_ensemble(F))[0],
            'ef_wootters': ef_wootters(rho)[1],
            'ppt': ppt_separable(rho),
        },
    )
sweep = pd.DataFrame(rows).set_index('F')
sweep

# %%
# Separable states
# ----------------
#
# Werner states are separable for `F <= 1/2`, while the closed form vanishes only for `F <= 1/4`.

sweep.loc[sweep['ppt'], ['mre_closed', 'ef_wootters']]
