from __future__ import print_function
"""
Common settings that need to be initialized once: the parallel backend,
the number of workers and the printing of the master process.
"""
import os
import time
import inspect
import concurrent.futures


# The parallelization setup
__PARALLEL_TYPE__ = "serial"
try:
    import mpi4py
    import mpi4py.MPI
    __PARALLEL_TYPE__ = "mpi4py"
    if mpi4py.MPI.COMM_WORLD.Get_size() == 1:
        __PARALLEL_TYPE__ = "serial"
except ImportError:
    __PARALLEL_TYPE__ = "serial"


__SUPPORTED_LIBS__ = ["threads", "serial", "mpi4py"]
__MPI_LIBRARIES__ = ["mpi4py"]
__NPROC__ = 1
__THREADS_ENV__ = "HLYA_THREADS"


def ParallelPrint(*args, **kwargs):
    """
    Print only if I am the master
    """
    if am_i_the_master():
        print(*args, **kwargs)


def am_i_the_master():
    return get_rank() == 0


def get_rank():
    """
    Get the rank of the process (threads share rank 0)
    """
    if __PARALLEL_TYPE__ == "mpi4py":
        return mpi4py.MPI.COMM_WORLD.Get_rank()
    elif __PARALLEL_TYPE__ in ["serial", "threads"]:
        return 0
    else:
        raise NotImplementedError("Error, I do not know what is the rank with the {} parallelization".format(__PARALLEL_TYPE__))


def broadcast(list_of_values):
    """
    Broadcast the list to all the processors from the master.
    """
    if __PARALLEL_TYPE__ == "mpi4py":
        return mpi4py.MPI.COMM_WORLD.bcast(list_of_values, root=0)
    return list_of_values


def threads_from_environment(default=None):
    """
    Number of workers requested with the HLYA_THREADS environment variable.

    Parameters
    ----------
        default : int, optional
            Returned when the variable is unset. If None, the machine parallelism.
    """
    if default is None:
        default = os.cpu_count() or 1
    value = os.environ.get(__THREADS_ENV__, "").strip()
    if not value:
        return default
    try:
        n = int(value)
    except ValueError:
        raise ValueError("Error, {} must be a positive integer, got '{}'".format(__THREADS_ENV__, value))
    if n < 1:
        raise ValueError("Error, {} must be a positive integer, got '{}'".format(__THREADS_ENV__, value))
    return n


def SetupParallel(n_processors=1):
    """
    SETUP THE MODULE FOR PARALLEL EXECUTION
    =======================================

    For serial execution use n_processors = 1.
    Without MPI, more than one processor switches to a pool of threads.
    Under MPI the number of workers is the size of the communicator and
    n_processors is ignored.

    Parameters
    ----------
        n_processors : int
            The number of workers for the candidate searches.
    """
    global __NPROC__
    global __PARALLEL_TYPE__

    if n_processors < 1:
        raise ValueError("Error, the number of processors must be 1 or higher")

    if __PARALLEL_TYPE__ == "mpi4py":
        __NPROC__ = mpi4py.MPI.COMM_WORLD.Get_size()
        return

    __NPROC__ = n_processors
    __PARALLEL_TYPE__ = "threads" if n_processors > 1 else "serial"


def GetParallelType():
    return __PARALLEL_TYPE__


def GetNProc():
    """
    GET THE PROCESSORS FOR THE PARALLEL COMPUTATION
    ===============================================

    The number of workers currently set up. 1 for a serial run.
    You can modify it using the SetupParallel method.
    """
    if __PARALLEL_TYPE__ == "mpi4py":
        return mpi4py.MPI.COMM_WORLD.Get_size()
    return __NPROC__


def split_configurations(n_configs):
    """
    Return the (start, end) range of inputs that each process must compute.
    """
    nproc = GetNProc()
    list_of_inputs = []
    index = 0
    for i in range(nproc):
        start_config = index
        index += n_configs // nproc
        if i < n_configs % nproc:
            index += 1
        list_of_inputs.append((start_config, index))
    return list_of_inputs


def _accepts_timer(function):
    return "timer" in inspect.signature(function).parameters


def GoParallel(function, list_of_inputs, timer=None):
    """
    GO PARALLEL
    ===========

    Evaluate the function on every input and return the list of outputs in
    the order of the inputs, whatever the number of workers.

    The good speedup is obtained when the cost of each call is large
    compared with the cost of moving the results around.

    Parameters
    ----------
        function : pointer to function
            The function to be executed in parallel. If it accepts a `timer`
            keyword, a child of timer is passed.
        list_of_inputs : list
            The inputs to be passed to the function.
        timer : Timer.Timer, optional
            Records the broadcast, compute and collect phases.
    """
    if __PARALLEL_TYPE__ not in __SUPPORTED_LIBS__:
        raise ValueError("Error, wrong parallelization type: %s\nSupported types: %s" % (__PARALLEL_TYPE__, " ".join(__SUPPORTED_LIBS__)))

    t1 = time.time()
    list_of_inputs = broadcast(list(list_of_inputs))

    kwargs = {}
    cmp_timer = None
    if timer is not None and _accepts_timer(function):
        cmp_timer = timer.spawn_child()
        kwargs["timer"] = cmp_timer

    def work(x):
        return function(x, **kwargs)

    if __PARALLEL_TYPE__ == "mpi4py":
        # Contiguous chunks, so that the gathered list keeps the input order
        start, end = split_configurations(len(list_of_inputs))[get_rank()]
        t2 = time.time()
        partial = [work(x) for x in list_of_inputs[start:end]]
        t3 = time.time()
        gathered = mpi4py.MPI.COMM_WORLD.allgather(partial)
        result = [item for sublist in gathered for item in sublist]
    elif __PARALLEL_TYPE__ == "threads" and GetNProc() > 1 and len(list_of_inputs) > 1:
        t2 = time.time()
        with concurrent.futures.ThreadPoolExecutor(max_workers=GetNProc()) as executor:
            result = list(executor.map(work, list_of_inputs))
        t3 = time.time()
    else:
        t2 = time.time()
        result = [work(x) for x in list_of_inputs]
        t3 = time.time()

    t4 = time.time()
    if timer is not None:
        timer.add_timer("broadcast", t2 - t1)
        timer.add_timer("compute", t3 - t2, timer=cmp_timer)
        timer.add_timer("collect", t4 - t3)

    return result
