from .table import ActionDescriptor, FiltrationTable, table_from_values, tau_table
from .stadnik import TameDescriptor, trivial_v, stadnik_v, stadnik_v_direct
from .axioms import AxiomEntry, AxiomReport, AxiomChecker, annihilator, check_v_axioms
from .compare import CompareReport, compare_v_tau, default_points
from .graph import GraphWitness, graph_ring, graph_counterexample_check, graph_embedding_table

__all__ = [
    "ActionDescriptor",
    "FiltrationTable",
    "table_from_values",
    "tau_table",
    "TameDescriptor",
    "trivial_v",
    "stadnik_v",
    "stadnik_v_direct",
    "AxiomEntry",
    "AxiomReport",
    "AxiomChecker",
    "annihilator",
    "check_v_axioms",
    "CompareReport",
    "compare_v_tau",
    "default_points",
    "GraphWitness",
    "graph_ring",
    "graph_counterexample_check",
    "graph_embedding_table",
]
