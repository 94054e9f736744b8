# coding=utf-8
"""Stategrid default settings.

Settings are loaded from the config.json file that sits next to this module.
Any key missing from the file keeps its built-in value.

Usage:

.. code-block:: python

    from stategrid.config import defaults
    print(defaults.builtin_depths['<'])
    print(defaults.placement_mode)
"""
import os
import json
import logging

_logger = logging.getLogger(__name__)


class Defaults(object):
    """Stategrid default settings.

    Args:
        config_file: The path to a config.json file from which settings will be
            loaded. If None, the config.json next to this module will be used.

    Properties:
        * builtin_depths
        * placement_mode
        * subset_mode
        * document_format
        * map_format
        * document_version
        * config_file
    """
    PLACEMENT_MODES = ('transparent', 'elevating')
    SUBSET_MODES = ('declared', 'free')
    _BUILTIN_DEPTHS = {
        'Bool': 1, 'set': 2, 'card': 2, 'in': 2, 'subset': 2,
        '<': 3, '>': 3, '=': 3, '<=': 3, '>=': 3, 'i': 3, 'succ': 3,
        '+': 4, '-': 4, 'abs': 4, 'rational': 4
    }

    def __init__(self, config_file=None):
        self.config_file = config_file

    @property
    def builtin_depths(self):
        """Dictionary of default state depths for the builtin symbols."""
        return dict(self._builtin_depths)

    @property
    def placement_mode(self):
        """Default composition mode used to place expressions."""
        return self._placement_mode

    @property
    def subset_mode(self):
        """Default reading of the sub-families of the processing structure."""
        return self._subset_mode

    @property
    def document_format(self):
        """Name written in the header line of universe documents."""
        return self._document_format

    @property
    def map_format(self):
        """Name written in the header line of translation map documents."""
        return self._map_format

    @property
    def document_version(self):
        """Version written in the header line of all documents."""
        return self._document_version

    @property
    def config_file(self):
        """Get or set the path to the config.json file from which settings are loaded.
        """
        return self._config_file

    @config_file.setter
    def config_file(self, cfg):
        if cfg is None:
            cfg = os.path.join(os.path.dirname(__file__), 'config.json')
        self._load_from_file(cfg)
        self._config_file = cfg

    def _load_from_file(self, file_path):
        """Set all of the settings of this object from a config JSON file."""
        # set the built-in values first
        self._builtin_depths = dict(self._BUILTIN_DEPTHS)
        self._placement_mode = 'transparent'
        self._subset_mode = 'declared'
        self._document_format = 'stategrid-universe'
        self._map_format = 'stategrid-map'
        self._document_version = 'v1'

        try:
            with open(file_path, 'r') as cfg:
                data = json.load(cfg)
        except (IOError, OSError, ValueError) as e:
            _logger.warning('Failed to load settings from %s. %s', file_path, e)
            return

        depths = data.get('builtin_depths', {})
        for name, depth in depths.items():
            assert isinstance(depth, int) and depth >= 0, 'Builtin depth of "{}" ' \
                'must be a non-negative integer. Got {}.'.format(name, depth)
            self._builtin_depths[name] = depth
        mode = data.get('placement_mode', self._placement_mode)
        assert mode in self.PLACEMENT_MODES, 'Placement mode "{}" is not one of ' \
            '{}.'.format(mode, self.PLACEMENT_MODES)
        self._placement_mode = mode
        sub_mode = data.get('subset_mode', self._subset_mode)
        assert sub_mode in self.SUBSET_MODES, 'Subset mode "{}" is not one of ' \
            '{}.'.format(sub_mode, self.SUBSET_MODES)
        self._subset_mode = sub_mode
        self._document_format = data.get('document_format', self._document_format)
        self._map_format = data.get('map_format', self._map_format)
        self._document_version = data.get('document_version', self._document_version)

    def ToString(self):
        return self.__repr__()

    def __repr__(self):
        return 'Stategrid Defaults: {}'.format(self.config_file)


"""Object possessing the default settings of stategrid."""
defaults = Defaults()
