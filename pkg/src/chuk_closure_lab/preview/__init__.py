"""
Graphviz previews of automata, Stallings graphs and factorization graphs.

## Usage

```python
from chuk_closure_lab.preview import export_dot, to_digraph

dot = export_dot(dfa)
to_digraph(dfa).render("dfa", format="svg")  # needs the Graphviz executables
```
"""

from .dot_renderer import DotRenderer, export_dot, to_digraph

__all__ = ["DotRenderer", "export_dot", "to_digraph"]
