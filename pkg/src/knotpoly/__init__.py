"""Exact skein-polynomial engine for knot diagrams and Legendrian fronts."""

from .laurent import (LaurentPoly, DeltaFraction, TAU, exact_divide,
                      exact_divide_delta, substitute_jaeger)
from .diagram import (MorseDiagram, BraidWord, DiagramError, ParseError,
                      parse_braid, braid_closure, diagram_stats,
                      crossing_surgery, connected_sum, canonical_code,
                      reduce_diagram)
from .front import (FrontWord, LegendrianInvariants, parse_front, morsify,
                    classical_invariants, front_orient, saucer_front,
                    crossed_saucer_front)
from .skein import (SkeinCache, SkeinResult, SkeinStats, homfly_R,
                    kauffman_D, full_invariants, DELTA, DELTA_D,
                    CACHE_ENV_VAR)
from .jaeger import (SpliceState, Certificate, enumerate_states,
                     enumerate_front_states, jaeger_both_sides, lj_both_sides,
                     lemma_check, proof_chain_check, selection_sweep,
                     DIAGRAM_WEIGHTS, FRONT_WEIGHTS)
from .inequalities import (BoundReport, check_front_bounds, mfw_check,
                           additivity_audit, ep_ey_compare)
from .harness import SearchConfig, enumerate_braids, search, load_config

__version__ = "0.1.0"
