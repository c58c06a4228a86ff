"""Exact volumes of flow polytopes of full DAGs in F_(n,3).

The family is indexed by binary words, ordered as a Boolean lattice by
edge interchanges; volumes are Kostant partition function values and
equal linear-extension counts of planar dual posets.
"""
from .dag import (CROSSED, NESTED, Dag, DegreeSequence, Edge, EdgePair, crossed_pair, edge_count_check,
                  find_pairs, interchange, nested_pair, overpasses, require_family,
                  reverse_interchange, spine, unique_overpass, validate_family)
from .duality import (DOWNSET_DP, PERMUTATION_ORACLE, PlanarEmbedding, RankOnePoset, count_bnt,
                      crossing_positions, dag_from_tree, embed, enumerate_bnt, flip,
                      flip_edge_for_position, linear_extensions, spanning_path, tree_from_word,
                      truncated_dual, verify_duality, word_from_tree)
from .errors import (ClassificationError, CountOverflowError, DagError, FamilyError, FlowvolError,
                     LevelError, MissingSpineEdgeError, NetflowError, PairError, RealizabilityError,
                     ResourceLimitError, UINT64_MAX)
from .family import (BinaryWord, Cover, HasseLattice, all_words, apply_cover, brute_force_family,
                     cover_pair, dag_from_word, enumerate_family, hasse_lattice, word_from_dag)
from .flows import (FLOW_REVERSAL, FRONTIER_DP, LIDSKII_SIMPLE, LIDSKII_SUM, TREE, W_SPECIAL,
                    FlowTree, FrontierCounter, PartialFlow, TreeNode, branch_count,
                    build_flow_tree, children, count_completions, flow_reversal_netflow,
                    inflow_bound_check, kostant, level_nodes, lidskii_simple_netflow,
                    lidskii_volume, make_w, root_flow, unit_netflow, volume_f1)
from .proof import (BAD, GOOD, CoverAudit, InterchangeContext, LeafIdentities, audit_cover, classify,
                    leaf_identities, phi, phi_inverse, proof_sweep, psi, verify_order_reversal)
from .report import Report
from .checks import verify_family_oracle, verify_structure

__version__ = "0.1.0"
