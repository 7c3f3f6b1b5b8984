from hypothesis import HealthCheck, settings

settings.register_profile("repo", derandomize=True, deadline=None, max_examples=200,
                          suppress_health_check=[HealthCheck.too_slow])
settings.load_profile("repo")


def kostant_counts(heights, depth):
    """Coefficients of prod_beta 1/(1 - q^ht(beta)) up to q^depth."""
    coef = [1] + [0] * depth
    for h in heights:
        for d in range(h, depth + 1):
            coef[d] += coef[d - h]
    return coef
