class _Configuration:
    _step = 1e-4
    _scan_step = 1e-3
    _det_tolerance = 1e-9
    _equidiagonal_tolerance = 1e-7
    _threshold_band = 1e-6
    _root_tolerance = 1e-8
    _singularity_window = 1e-4
    _zero_scan_points = 10000
    _shadow_probability = 0.999
    _parallel = False
    _max_workers = None

    INTEGRATION_DEFAULTS = {
        'reference': {
            'step': 1e-4,
            'scan_step': 1e-4,
            'root_tolerance': 1e-10
        },
        'default': {
            'step': 1e-4,
            'scan_step': 1e-3,
            'root_tolerance': 1e-8
        },
        'draft': {
            'step': 1e-3,
            'scan_step': 1e-2,
            'root_tolerance': 1e-6
        }
    }

    @property
    def step(self):
        """
        Fixed RK4 step in dimensionless time used by the propagators.
        """
        return self._step

    @step.setter
    def step(self, step):
        assert step > 0, 'step must be positive'
        self._step = float(step)

    @property
    def scan_step(self):
        """
        RK4 step used for raster scans and curve bisection, where many monodromy matrices are needed.
        """
        return self._scan_step

    @scan_step.setter
    def scan_step(self, step):
        assert step > 0, 'scan_step must be positive'
        self._scan_step = float(step)

    @property
    def det_tolerance(self):
        return self._det_tolerance

    @det_tolerance.setter
    def det_tolerance(self, tol):
        assert tol > 0
        self._det_tolerance = float(tol)

    @property
    def equidiagonal_tolerance(self):
        return self._equidiagonal_tolerance

    @equidiagonal_tolerance.setter
    def equidiagonal_tolerance(self, tol):
        assert tol > 0
        self._equidiagonal_tolerance = float(tol)

    @property
    def threshold_band(self):
        """
        Half width of the band around abs(trace) = 2 that is classified as the stability threshold.
        """
        return self._threshold_band

    @threshold_band.setter
    def threshold_band(self, band):
        assert band >= 0
        self._threshold_band = float(band)

    @property
    def root_tolerance(self):
        return self._root_tolerance

    @root_tolerance.setter
    def root_tolerance(self, tol):
        assert tol > 0
        self._root_tolerance = float(tol)

    @property
    def singularity_window(self):
        """
        Window in abs(theta) inside which the amplitude is evaluated from the Taylor expansion about the zero of theta.
        """
        return self._singularity_window

    @singularity_window.setter
    def singularity_window(self, window):
        assert 0 < window < 1e-1
        self._singularity_window = float(window)

    @property
    def zero_scan_points(self):
        return self._zero_scan_points

    @zero_scan_points.setter
    def zero_scan_points(self, points):
        assert type(points) == int and points > 10
        self._zero_scan_points = points

    @property
    def shadow_probability(self):
        """
        Two-sided probability mass enclosed by an uncertainty shadow.
        """
        return self._shadow_probability

    @shadow_probability.setter
    def shadow_probability(self, probability):
        assert 0 < probability < 1
        self._shadow_probability = float(probability)

    @property
    def parallel(self):
        return self._parallel

    @parallel.setter
    def parallel(self, parallel):
        self._parallel = bool(parallel)

    @property
    def max_workers(self):
        return self._max_workers

    @max_workers.setter
    def max_workers(self, max_workers):
        assert max_workers is None or (type(max_workers) == int and max_workers > 0)
        self._max_workers = max_workers

    def set_target_profile(self, profile_name):
        assert profile_name in self.INTEGRATION_DEFAULTS, \
            'Profile name must be one of %s' % list(self.INTEGRATION_DEFAULTS.keys())

        for key, value in self.INTEGRATION_DEFAULTS[profile_name].items():
            self.__setattr__(key, value)

    def as_dict(self):
        """
        Snapshot of all settings, used for run manifests.

        :return: Dictionary of the current settings.
        :rtype: dict
        """
        return {key: getattr(self, key) for key in
                ('step', 'scan_step', 'det_tolerance', 'equidiagonal_tolerance', 'threshold_band', 'root_tolerance',
                 'singularity_window', 'zero_scan_points', 'shadow_probability', 'parallel', 'max_workers')}
