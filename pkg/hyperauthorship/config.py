class Config:
    def __init__(self):
        # Threshold detection
        self.coverage = 0.90
        self.chebyshev_k = 3.0
        self.normality_skew_limit = 0.5
        self.reconcile_tolerance = 2

        # Path lengths switch from exact to sampled sources above this size
        self.exact_path_threshold = 5000
        self.path_sample_size = 1000

        self.betweenness_sample_size = 1000
        self.eigenvector_tol = 1e-6
        self.eigenvector_max_iter = 1000

        self.omega_niter = 5
        self.omega_nrand = 5
        self.omega_max_nodes = 5000
        self.powerlaw_xmin_quantile = 0.9

        self.case_study_quantile = 0.1

        # Per-source work is split into fixed chunks so results do not depend on n_jobs
        self.n_jobs = 1
        self.chunk_size = 64

        self.float_precision = 3


config = Config()
