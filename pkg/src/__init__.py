"""
qir-classify Python package.

Encodes images as FRQI or MCQI quantum states, trains variational and
autoencoder classifiers on a statevector simulator and reproduces the
accuracy sweeps from experiment config files.
"""
