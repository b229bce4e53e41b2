class AbnormalityEvent:
    """Abnormality of one feature-case model crossed the alarm threshold."""

    def __init__(self, feature_id: str, tick: int, time: float, theta: float, map_word: int):
        assert isinstance(feature_id, str)
        assert isinstance(tick, int)
        assert 0.0 <= theta <= 1.0

        self.feature_id = feature_id
        self.tick = tick
        self.time = time
        self.theta = theta
        self.map_word = map_word

    def __repr__(self) -> str:
        return f"AbnormalityEvent({self.feature_id} tick={self.tick} t={self.time:.2f} theta={self.theta:.3f})"
