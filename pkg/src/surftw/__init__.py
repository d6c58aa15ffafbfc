"""Tree-width of embedded hypergraphs and their surface duals."""

from .duality import (BoundReport, check_duality_bound, enumerate_embeddings,
                      fuzz_small_embeddings, node_inequality)
from .embedded import (EmbeddedHypergraph, RadialEmbedding, alpha_max, face_border, hyper_dual,
                       incidence_from_graph, radial)
from .errors import InternalError, SurftwError, TooLargeError
from .extremal import (TodincaSpec, build_gkp, crosses_bramble, dual_decomposition_gkp, grid,
                       grid_path_decomposition, todinca, todinca_decomposition)
from .facewidth import face_width, face_width_at_least
from .hypergraph import (Hypergraph, TreeDecomposition, border, bramble_order, contract,
                         is_bramble, validate_td)
from .kernels import BACKEND
from .partition_tree import PartitioningTree, is_ptree, ptree_width
from .pi_structure import RadialStructure
from .surface_map import MapBuilder, SurfaceMap, euler_genus, is_orientable
from .synthesis import optimal_ptree
from .treewidth import exact_treewidth

__version__ = "0.1.0"
