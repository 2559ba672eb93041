from .fixtures import ExpectedCord, Fixture, fixture, fixture_names, partition_chain_name
from .lattices import (boolean_lattice, distributive_lattice, is_lattice, lin_labels,
                       max_min_labeling, minimal_labeling, order_ideals, partition_lattice)
from .permutations import (generalized_quotient, is_generalized_quotient, left_weak_order,
                           weak_order)
from .trees import (chain_to_tree, enumerate_forests, enumerate_trees, tree_label,
                    tree_poset, tree_to_chain)
from .young import (StandardTableau, YoungShape, left_order, row_tableau, row_word,
                    standard_tableaux, tableau_swap_poset, young_interval)
