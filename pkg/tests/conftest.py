from hypothesis import HealthCheck, settings

# Quadrature-backed evaluations can take a few hundred ms; the default
# deadline would make these tests flaky. derandomize keeps runs identical.
settings.register_profile(
    "monometric",
    deadline=None,
    derandomize=True,
    max_examples=25,
    suppress_health_check=[HealthCheck.too_slow],
)
settings.load_profile("monometric")
