from cubical_lab.realization.engine import GluingEngine, grid_chains
from cubical_lab.realization.export import export_mesh
from cubical_lab.realization.mesh import Mesh, SimplicialComplex
from cubical_lab.realization.realization import realize_numeric, triangulate
