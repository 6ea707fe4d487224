"""Crystal graphs of higher-level Fock spaces and constituent bounds for
parabolically induced modules of Ariki-Koike algebras."""

from .bounds import (BoundReport, ParameterSet, UnitExpr, cherednik_bound, class_bound,
                     class_multicharge, degenerate_bound, fock_module_bound, module_bound,
                     parse_q, parse_unit, parse_units, q1_char0_count, q_classes, theorem_bound)
from .crystal import (CrystalGraph, e_tilde, export_dot, export_json, f_tilde,
                      full_fock_crystal, is_kleshchev, kleshchev_component, read_json)
from .errors import DomainError, ParseError
from .fock import (FockVector, Weight, apply_d, apply_e, apply_f, apply_h, cartan_matrix,
                   check_relations, weight, weight_via_roots)
from .grothendieck import (GrothVector, SplitVector, diagram_commutes, induce, induce_split,
                           morita_split, restrict, restrict_split)
from .partitions import (Multipartition, Node, Partition, add_node, addable_nodes,
                         enumerate_multipartitions, format_multipartition, node_above,
                         parse_multipartition, remove_node, removable_nodes)
from .residues import INFINITY, ONE, EParam, Multicharge, normalize_multicharge, residue, residue_content
from .signatures import (ReducedSignature, Signature, cogood_node, conormal_nodes, eps,
                         good_node, i_signature, normal_nodes, phi, reduce)

__version__ = "0.1.0"
