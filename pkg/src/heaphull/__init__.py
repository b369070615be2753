"""Octagon-filtered 2D convex hull with a deterministic chunked reduction engine."""
from .filtering import ExtremeSet, Octagon, build_octagon, classify_points, find_extremes, run_filter
from .geom import Location, Point2D, PointSet, manhattan, orientation, point_in_convex_polygon
from .hull import HullPolygon, filter_rate, heaphull, heaphull_run, oracle_hull, quadrant_hull
from .par_reduce import ReduceConfig, ReduceEngine, chunked_argmax, chunked_argmin, parallel_map
from .pointgen import GenSpec, generate
from .pointio import read_points, write_points

__all__ = [
    "ExtremeSet", "Octagon", "build_octagon", "classify_points", "find_extremes", "run_filter",
    "Location", "Point2D", "PointSet", "manhattan", "orientation", "point_in_convex_polygon",
    "HullPolygon", "filter_rate", "heaphull", "heaphull_run", "oracle_hull", "quadrant_hull",
    "ReduceConfig", "ReduceEngine", "chunked_argmax", "chunked_argmin", "parallel_map",
    "GenSpec", "generate", "read_points", "write_points",
]
