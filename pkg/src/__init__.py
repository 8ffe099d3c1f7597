"""IDEAL4: delta(2) invariant of hypersurfaces in Euclidean 4-space"""
