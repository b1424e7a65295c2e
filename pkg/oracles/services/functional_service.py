import numpy as np
from scipy.special import xlogy


class FunctionalService:

    def mean(self, model, f):
        return float(model.mu @ np.asarray(f, dtype=float))

    def variance(self, model, f):
        f = np.asarray(f, dtype=float)
        return float(model.mu @ (f - model.mu @ f) ** 2)

    def entropy(self, model, g):
        """Ent(g) = mu(g log g) - mu(g) log mu(g) for g >= 0, with 0 log 0 = 0."""
        g = np.asarray(g, dtype=float)
        mass = model.mu @ g
        return float(model.mu @ xlogy(g, g) - xlogy(mass, mass))

    def entropy_of_square(self, model, f):
        return self.entropy(model, np.asarray(f, dtype=float) ** 2)

    def median(self, model, f):
        f = np.asarray(f, dtype=float)
        order = np.argsort(f, kind='stable')
        cumulative = np.cumsum(model.mu[order])
        return float(f[order][np.searchsorted(cumulative, 0.5 - 1e-15)])

    def dirichlet(self, model, f, g=None):
        df = model.gradient(f)
        dg = df if g is None else model.gradient(g)
        return float(0.5 * np.sum(df * dg * model.conductance))

    def gradient_mass(self, model, f):
        return float(np.sum(np.abs(model.gradient(f)) * model.conductance))
