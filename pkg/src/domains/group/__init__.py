"""Isotropy group of the hyperquadric v = ⟨z,z⟩"""
