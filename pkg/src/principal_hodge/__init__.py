"""Exact enumeration of principal Hodge representations of simple Lie algebras."""

from .rootsys import (ConfigurationError, LieType, RootSystem, Weight, build_root_system,
                      dual_weight, fundamental_weight, parse_lie_type)
from .weightsys import (MFCatalogEntry, ResourceError, WeightSystem, is_weight_multiplicity_free,
                        mf_catalog, spin_weight_oracle, weight_system, weyl_dim)
from .hodge import (EigenReport, GradingElement, HalfInt, ModuleSpec, Pairing, Structure,
                    Verdict, eigen_report, eigenvalue, is_principal, rcq_structure, t_compact)
from .classify import (SearchOptions, SearchProblem, SearchResult, Solution, enumerate_gradings,
                       naive_search, principal_gradings, search_principal, type_a_filters)
from .golden import verify_paper

__version__ = "0.1.0"
