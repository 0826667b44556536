# Shared verification kernel package
# Exact arithmetic, the Taft algebra, the comodule algebra A and the suite runner
__version__ = "1.0.0"
