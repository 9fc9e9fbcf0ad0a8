"""Base classes for parameter sets and ensemble searches."""

# Author: Georgios Douzas <gdouzas@icloud.com> License: MIT

import inspect
from abc import abstractmethod
from typing import Any, Self


class BaseParameters:
    """Base class for all validated parameter sets.

    Every argument of the subclass constructor is checked by `_init_param`, which stores the
    checked value in an attribute with the same name and a trailing underscore. Raw values are
    kept untouched under the original name.
    """

    def __init__(self: Self) -> None:
        """Initialize the parameter set by checking every constructor argument."""
        self._init()

    @abstractmethod
    def _init_param(self: Self, param_name: str) -> Self:
        return self

    def _check_params(self: Self) -> Self:
        """Check constraints that involve more than one parameter."""
        return self

    def _param_names(self: Self) -> list[str]:
        parameters = inspect.signature(self.__init__).parameters.values()  # type: ignore[misc]
        return [parameter.name for parameter in parameters]

    def _init(self: Self) -> Self:
        """Initialize the checked parameters."""
        for param_name in self._param_names():
            self._init_param(param_name)
        return self._check_params()

    def get_params(self: Self) -> dict[str, Any]:
        """Get the raw parameters.

        Returns:
            params:
                Mapping of parameter names to the values given at construction.
        """
        return {param_name: getattr(self, param_name) for param_name in self._param_names()}

    def __repr__(self: Self) -> str:
        """Representation of the parameter set."""
        params = ', '.join(f'{name}={value!r}' for name, value in self.get_params().items())
        return f'{self.__class__.__name__}({params})'


class BaseSearch:
    """Base class for all searches over representations of a state.

    Args:
        config:
            The parameters of the search. If `None`, the default parameters of
            `_default_config` are used.
    """

    def __init__(self: Self, config: BaseParameters | None = None) -> None:
        """Initialize the search with its parameters."""
        self.config = config

    @abstractmethod
    def _default_config(self: Self) -> BaseParameters:
        pass

    @abstractmethod
    def _check_state(self: Self, state: Any) -> Self:  # noqa: ANN401
        return self

    def _check_config(self: Self) -> Self:
        if self.config is None:
            self.config_ = self._default_config()
        elif not isinstance(self.config, type(self._default_config())):
            error_msg = (
                f'Parameter `config` should be a `{type(self._default_config()).__name__}` object. '
                f'Got `{type(self.config).__name__}` instead.'
            )
            raise TypeError(error_msg)
        else:
            self.config_ = self.config
        return self

    def search(self: Self, state: Any) -> Self:  # noqa: ANN401
        """Search for the best representation of the state."""
        self._check_config()
        self._check_state(state)
        self.search_results_: dict[str, Any] = {}
        return self

    def __repr__(self: Self) -> str:
        """Representation of the search."""
        return f'{self.__class__.__name__}(config={self.config!r})'
