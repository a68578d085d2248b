"""Verification clauses, one validator per clause."""
from .faces_hamiltonian_validator import FacesHamiltonianValidator
from .faces_match_unions_validator import FacesMatchUnionsValidator
from .matchings_cover_validator import MatchingsCoverEdgesValidator
from .matchings_disjoint_validator import MatchingsDisjointValidator
from .matchings_perfect_validator import MatchingsPerfectValidator
from .unions_hamiltonian_validator import UnionsHamiltonianValidator
from .validator_factory import ValidatorFactory, create_validator

__all__ = [
    'MatchingsDisjointValidator',
    'MatchingsPerfectValidator',
    'MatchingsCoverEdgesValidator',
    'UnionsHamiltonianValidator',
    'FacesHamiltonianValidator',
    'FacesMatchUnionsValidator',
    'ValidatorFactory',
    'create_validator',
]
