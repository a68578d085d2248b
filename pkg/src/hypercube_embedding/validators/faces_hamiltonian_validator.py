"""
Checks that every face of the rotation system is a Hamiltonian cycle.
"""
from ..core.base_validator import BaseClauseValidator, EmbeddingContext
from ..core.embedding import is_hamiltonian_face
from ..models.enums import ClauseType
from ..models.results import ClauseResult


class FacesHamiltonianValidator(BaseClauseValidator):
    """Every traced facial walk visits each vertex exactly once."""

    def get_clause_type(self) -> ClauseType:
        return ClauseType.FACES_HAMILTONIAN

    def is_applicable(self, context: EmbeddingContext) -> bool:
        return context.has_rotation

    def _execute_check(self, context: EmbeddingContext) -> ClauseResult:
        if context.faces is None:
            return self._failed(context.trace_error or "faces were not traced")

        faces = context.faces
        for index, walk in enumerate(faces):
            if not is_hamiltonian_face(context.graph, walk):
                return self._failed(
                    f"face {index} has length {len(walk)}, graph has {context.graph.vertex_count} vertices",
                    checked=faces.face_count, face=index, length=len(walk))
        return self._passed(faces.face_count)
