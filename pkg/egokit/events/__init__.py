from .abnormality_event import AbnormalityEvent
