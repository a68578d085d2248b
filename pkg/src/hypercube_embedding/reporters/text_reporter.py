"""
Text reporter implementation.
Renders the report document as human-readable lines with the same content
as the JSON rendering.
"""
from typing import List

from ..models.enums import ReporterType
from ..models.reports import ReportDocument
from .base_reporter import BaseReporter


class TextReporter(BaseReporter):
    """Renders plain-text reports."""

    def get_reporter_type(self) -> ReporterType:
        return ReporterType.TEXT

    def render(self, document: ReportDocument) -> str:
        lines: List[str] = []
        if document.graph:
            lines.append(f"graph: {document.graph}")

        emb = document.embedding
        if emb is not None:
            lines.append(f"v={emb.vertex_count} e={emb.edge_count} f={emb.face_count} genus={emb.genus}")
            lines.append(f"hamiltonian embedding: {'yes' if emb.is_hamiltonian_embedding else 'no'}")
            if emb.faces_match_unions is not None:
                lines.append(f"faces match unions: {'yes' if emb.faces_match_unions else 'no'}")
            for face in emb.faces:
                flag = "hamiltonian" if face.hamiltonian else "not hamiltonian"
                union = f" union {face.union_index + 1}" if face.union_index is not None else ""
                lines.append(f"  face {face.index}: length {face.length} {flag}{union}")

        if document.intersections is not None:
            profile = document.intersections
            lines.append(f"intersections: {len(profile.nonempty())} non-empty pairs"
                         f"{' (degenerate)' if profile.degenerate else ''}")
            for pair in profile.nonempty():
                adjacent = " shares adjacent edges" if pair.shares_adjacent_edges else ""
                lines.append(f"  faces {pair.first},{pair.second}: size {pair.size} "
                             f"{pair.classification}{adjacent}")

        shape = document.intersection_graph_shape
        if shape is not None:
            weight = shape.uniform_weight if shape.uniform_weight is not None else "mixed"
            lines.append(f"intersection graph: {shape.kind} ({shape.node_count} nodes, "
                         f"{shape.edge_count} edges, weight {weight})")

        for key, value in document.consistency.items():
            lines.append(f"{key}: {'yes' if value else 'no'}")

        if document.conditions is not None:
            cond = document.conditions
            lines.append(cond.get_summary_text())
            for clause, holds in cond.clause_results.items():
                lines.append(f"  {clause}: {'yes' if holds else 'no'}")

        if document.search is not None:
            search = document.search
            lines.append(f"search: {search.mode} on {search.graph}")
            lines.append(search.get_summary_text())
            lines.append(f"space_size={search.space_text} hits={search.hits} "
                         f"max_hamiltonian_faces={search.max_hamiltonian_faces}")
            if search.seed is not None:
                lines.append(f"seed={search.seed} budget={search.budget}")

        if document.verification is not None:
            lines.append(document.verification.get_summary_text())
            for result in document.verification.results:
                lines.append(f"  {result.get_summary_text()}")

        return '\n'.join(lines) + '\n'
