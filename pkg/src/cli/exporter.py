"""Export formatting: DOT drawings and hardness certificates.

These are pure formatter functions; they never touch the filesystem. The CLI commands
decide where the content is written.
"""

from pathlib import Path

from pydantic import BaseModel

from src.common.types import Weight
from src.graph.cost import edge_usage
from src.graph.instance import Instance, Solution
from src.hardness.gadget import GeneratedInstance, Orientation

FORWARD_COLOR = "blue"
BACKWARD_COLOR = "red"
SHARED_COLOR = "purple"


def format_dot(
    instance: Instance, solution: Solution | None = None, labels: dict[int, str] | None = None
) -> str:
    """Render an instance as a Graphviz digraph, optionally highlighting a solution.

    Edges used only by forward walks are blue, only by backward walks red, and by both
    purple; the pen width grows with the larger of the two traversal counts.

    Args:
        instance: Instance to draw
        solution: Optional solution whose edges are highlighted
        labels: Optional vertex labels (defaults to the vertex ids)

    Returns:
        DOT source text
    """
    labels = labels or {}
    forward = edge_usage(solution.forward) if solution else {}
    backward = edge_usage(solution.backward) if solution else {}
    lines = ["digraph scss {", "  rankdir=LR;"]
    for v in range(instance.graph.n):
        label = labels.get(v, str(v))
        attributes = [f'label="{label}"']
        if v in (instance.s, instance.t):
            attributes.append("shape=doublecircle")
        lines.append(f"  {v} [{', '.join(attributes)}];")
    for edge_id, edge in enumerate(instance.graph.edges):
        attributes = [f'label="{edge.weight}"']
        f, b = forward.get(edge_id, 0), backward.get(edge_id, 0)
        if f or b:
            color = SHARED_COLOR if f and b else FORWARD_COLOR if f else BACKWARD_COLOR
            attributes.extend([f"color={color}", f"penwidth={1 + max(f, b)}"])
        lines.append(f"  {edge.tail} -> {edge.head} [{', '.join(attributes)}];")
    lines.append("}")
    return "\n".join(lines) + "\n"


class CanonicalPathEntry(BaseModel):
    orientation: Orientation
    index: int
    track: int
    weight: Weight
    vertices: list[int]


class CertificateFile(BaseModel):
    """Sidecar written next to a generated hardness instance."""

    k: int
    n_eff: int
    delta: Weight
    connector: Weight
    alpha: Weight
    beta: Weight
    demands: tuple[int, int]
    canonical_paths: list[CanonicalPathEntry]


def format_certificate(generated: GeneratedInstance) -> str:
    """Serialize beta, the weight parameters, and the canonical-path table as JSON."""
    instance, beta, layout = generated
    edges = instance.graph.edges
    params = layout.params
    certificate = CertificateFile(
        k=params.k,
        n_eff=params.n_eff,
        delta=params.delta,
        connector=params.connector,
        alpha=params.alpha,
        beta=beta,
        demands=(instance.k1, instance.k2),
        canonical_paths=[
            CanonicalPathEntry(
                orientation=path.id.orientation,
                index=path.id.index,
                track=path.id.track,
                weight=sum(edges[edge_id].weight for edge_id in path.edges),
                vertices=list(path.vertices),
            )
            for path in layout.canonical_paths
        ],
    )
    return certificate.model_dump_json(indent=2) + "\n"


def get_default_certificate_filename(instance_path: Path) -> Path:
    """Sidecar path for an instance file (e.g. "grid.scss" -> "grid.scss.cert.json")."""
    return instance_path.with_name(instance_path.name + ".cert.json")
