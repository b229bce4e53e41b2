from .component import Component
