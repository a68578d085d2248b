"""
Checks that the faces of the rotation system are exactly the consecutive
unions of the matchings.
"""
from ..core.base_validator import BaseClauseValidator, EmbeddingContext
from ..core.embedding import match_faces_to_unions
from ..models.enums import ClauseType
from ..models.results import ClauseResult


class FacesMatchUnionsValidator(BaseClauseValidator):
    """Bijection between face edge sets and the unions M_i + M_{i+1}."""

    prerequisites = (ClauseType.MATCHINGS_DISJOINT, ClauseType.MATCHINGS_PERFECT)

    def get_clause_type(self) -> ClauseType:
        return ClauseType.FACES_MATCH_UNIONS

    def is_applicable(self, context: EmbeddingContext) -> bool:
        return context.has_rotation and context.has_matchings

    def _execute_check(self, context: EmbeddingContext) -> ClauseResult:
        if context.faces is None:
            return self._failed(context.trace_error or "faces were not traced")

        matchings = context.matchings()
        faces = context.faces
        if faces.face_count != len(matchings):
            return self._failed(f"{faces.face_count} faces for {len(matchings)} unions",
                                checked=faces.face_count,
                                faces=faces.face_count, unions=len(matchings))

        assignment = match_faces_to_unions(faces, matchings)
        for index, union in enumerate(assignment):
            if union is None:
                return self._failed(f"face {index} matches no consecutive union",
                                    checked=faces.face_count, face=index)
        return self._passed(faces.face_count)
