import math

from scipy.special import comb

from bounds.models import BoundReport, FormulaTag

LOG_E2_PLUS_1 = math.log(math.e ** 2 + 1)


class ClosedFormService:

    def closed_forms(self, family, params):
        builder = getattr(self, f'_{family}', None)
        report = BoundReport()
        if builder is not None:
            for name, value in builder(*params):
                report.add(name, value, FormulaTag.REFERENCE, family=family, params=list(params))
        return report

    def johnson_kappa(self, n, k):
        total = sum(j ** 2 * comb(k, j, exact=True) * comb(n - k, j, exact=True) for j in range(min(k, n - k) + 1))
        return total / comb(n, k, exact=True)

    def circle_ls_upper(self, p):
        value = math.log(3 * (math.e ** 2 + 1)) / 12 * (p + 1) * (p + 2)
        return value if p % 2 == 0 else value * (1 + 3 / p)

    def circle_cp(self, p):
        return 1.0 / (1.0 - math.cos(2 * math.pi / p))

    def _complete(self, n):
        # Optimal c_LS of K_n under E(f,f) = 1/2 sum_e (D_e f)^2 Q(e); n = 2 is the limit 1/2.
        ls_optimal = 0.5 if n == 2 else (n - 1) * math.log(n - 1) / (2 * (n - 2))
        return [
            ('cp', (n - 1) / n),
            ('log_sobolev_path', (1 - 1 / n) * (math.log(n) + LOG_E2_PLUS_1)),
            ('ls_optimal', ls_optimal),
            ('K', (n - 1) / n),
            ('kappa', (n - 1) / n),
            ('cheeger', (n - 1) / n),
            ('gaussian_optimal', (n - 1) / (2 * n)),
        ]

    def _star(self, n):
        return [
            ('cp', 1.0),
            ('kappa', 1.5 - 1 / n),
            ('cheeger', 1.5 - 1 / n),
            ('K_upper', 4.5 - 4 / n),
            ('ls_upper', (1.5 - 1 / n) * math.log(2 * n * (math.e ** 2 + 1))),
            ('ls_lower', math.log(2 * n) / 2),
        ]

    def _binary_tree(self, d):
        return [
            ('b', float((2 ** d - 1) * 2 ** d)),
            ('diameter', float(2 * d)),
            ('kappa', float((2 * d - 3) * 2 ** d + 3)),
            ('kappa_upper', 9.0 * d * 2 ** (d - 1)),
            ('K_upper', 18.0 * 2 ** d * d ** 3),
        ]

    def _cycle(self, p):
        cp = self.circle_cp(p)
        return [
            ('cp', cp),
            ('ls_upper', self.circle_ls_upper(p)),
            ('ls_upper_relaxed', 5 * math.log(3 * (math.e ** 2 + 1)) * cp),
            ('kappa_leading', p ** 2 / 12),
        ]

    def _johnson(self, n, k):
        return [('kappa_upper', self.johnson_kappa(n, k))]
