"""Ten ways to multiply dense matrices, plus a timing/stability benchmark."""

from .matrix import (Dims, Matrix, ShapeError, check_conformable, from_rows, identity,
                     mat_new, max2, minus, norm_inf, plus, scalar_mul, zeros)
from .methods import KERNELS, MethodId, multiply
from .naive import (KahanAccumulator, kahan_absorb, kahan_sum, naive_kahan,
                    naive_on_array, naive_standard, unroll_four, unroll_three, unroll_two)
from .strassen import (OpCounter, PaddingPlan, embed, extract, padding_plan,
                       strassen_naive, strassen_recursive, strassen_winograd,
                       strassen_winograd_recursive)
from .winograd import (ScalingPlan, WinogradPrecompute, compute_scaling_exponent,
                       winograd_error_bound, winograd_original, winograd_precompute,
                       winograd_scaled)

__version__ = "0.1.0"
