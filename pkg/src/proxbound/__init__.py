"""
proxbound: exact desk-scale checks of the proximity expansion bound
for f(x, y, z) = (x - y)^2 + (phi(x) - z)^2.
"""
