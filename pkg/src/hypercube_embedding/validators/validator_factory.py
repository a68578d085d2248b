"""
Factory for creating clause validators.
Implements the Factory pattern for easy addition of new clauses.
"""
from typing import Any, Dict, List, Optional, Type

from ..core.base_validator import BaseClauseValidator
from ..core.exceptions import ConfigurationError
from ..models.enums import ClauseType
from ..utils.logger import get_logger
from .faces_hamiltonian_validator import FacesHamiltonianValidator
from .faces_match_unions_validator import FacesMatchUnionsValidator
from .matchings_cover_validator import MatchingsCoverEdgesValidator
from .matchings_disjoint_validator import MatchingsDisjointValidator
from .matchings_perfect_validator import MatchingsPerfectValidator
from .unions_hamiltonian_validator import UnionsHamiltonianValidator


class ValidatorFactory:
    """Factory for creating clause validator instances."""

    # Registry mapping clause types to implementation classes
    _registry: Dict[ClauseType, Type[BaseClauseValidator]] = {
        ClauseType.MATCHINGS_DISJOINT: MatchingsDisjointValidator,
        ClauseType.MATCHINGS_PERFECT: MatchingsPerfectValidator,
        ClauseType.MATCHINGS_COVER_EDGES: MatchingsCoverEdgesValidator,
        ClauseType.UNIONS_HAMILTONIAN: UnionsHamiltonianValidator,
        ClauseType.FACES_HAMILTONIAN: FacesHamiltonianValidator,
        ClauseType.FACES_MATCH_UNIONS: FacesMatchUnionsValidator,
    }

    _logger = get_logger("ValidatorFactory")

    @classmethod
    def create(cls, clause_type: str, config: Optional[Dict[str, Any]] = None) -> BaseClauseValidator:
        """
        Create a validator instance.

        Args:
            clause_type: Clause name, e.g. ``matchings_disjoint``
            config: Optional validator configuration

        Raises:
            ConfigurationError: If the clause is not supported
        """
        try:
            clause = ClauseType(str(clause_type).lower())
        except ValueError:
            raise ConfigurationError(
                f"Unknown clause: {clause_type}. "
                f"Supported clauses: {', '.join(t.value for t in ClauseType)}"
            )

        if clause not in cls._registry:
            raise ConfigurationError(f"Clause '{clause_type}' is registered but not implemented")

        cls._logger.debug(f"Creating {clause} validator")
        return cls._registry[clause](config=config)

    @classmethod
    def create_all(cls, config: Optional[Dict[str, Any]] = None) -> List[BaseClauseValidator]:
        """One validator per registered clause, in canonical order."""
        return [cls._registry[clause](config=config) for clause in ClauseType
                if clause in cls._registry]

    @classmethod
    def register(cls, clause_type: ClauseType,
                 validator_class: Type[BaseClauseValidator]) -> None:
        """
        Register a validator for a clause, replacing any existing one.

        Example:
            ValidatorFactory.register(ClauseType.FACES_HAMILTONIAN, MyFaceCheck)
        """
        if not issubclass(validator_class, BaseClauseValidator):
            raise TypeError(
                f"Validator class must inherit from BaseClauseValidator, "
                f"got {validator_class.__name__}"
            )
        cls._registry[clause_type] = validator_class
        cls._logger.info(f"Registered validator: {clause_type.value} -> {validator_class.__name__}")

    @classmethod
    def get_supported_types(cls) -> List[str]:
        return [clause.value for clause in ClauseType if clause in cls._registry]

    @classmethod
    def is_supported(cls, clause_type: str) -> bool:
        try:
            return ClauseType(str(clause_type).lower()) in cls._registry
        except ValueError:
            return False


def create_validator(clause_type: str, config: Optional[Dict[str, Any]] = None) -> BaseClauseValidator:
    """Convenience function to create a validator."""
    return ValidatorFactory.create(clause_type, config)
