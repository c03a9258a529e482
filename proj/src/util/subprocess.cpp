#include "satdforge/util/subprocess.hpp"

#include <fcntl.h>
#include <poll.h>
#include <sys/wait.h>
#include <unistd.h>

#include <csignal>
#include <cerrno>
#include <cstdlib>
#include <cstring>
#include <mutex>
#include <stdexcept>

namespace satdforge::util {

namespace {

// Writing to a child that exited early must surface as EPIPE, not SIGPIPE.
void ignore_sigpipe() {
  static std::once_flag once;
  std::call_once(once, [] { signal(SIGPIPE, SIG_IGN); });
}

void set_cloexec(int fd) {
  int flags = fcntl(fd, F_GETFD);
  if (flags >= 0) fcntl(fd, F_SETFD, flags | FD_CLOEXEC);
}

[[noreturn]] void child_exec(const std::vector<std::string>& argv,
                             const RunOptions& options, int in_fd, int out_fd,
                             int err_fd) {
  if (options.cwd && chdir(options.cwd->c_str()) != 0) _exit(127);
  for (const auto& [key, value] : options.env)
    setenv(key.c_str(), value.c_str(), 1);
  dup2(in_fd, STDIN_FILENO);
  dup2(out_fd, STDOUT_FILENO);
  dup2(err_fd, STDERR_FILENO);

  std::vector<char*> args;
  args.reserve(argv.size() + 1);
  for (const auto& a : argv) args.push_back(const_cast<char*>(a.c_str()));
  args.push_back(nullptr);
  execvp(args[0], args.data());
  _exit(127);
}

}  // namespace

CommandResult run_command(const std::vector<std::string>& argv,
                          const RunOptions& options) {
  if (argv.empty()) throw std::runtime_error("run_command: empty argv");
  ignore_sigpipe();

  int in_pipe[2], out_pipe[2], err_pipe[2];
  if (pipe(in_pipe) != 0 || pipe(out_pipe) != 0 || pipe(err_pipe) != 0)
    throw std::runtime_error("run_command: pipe() failed");

  pid_t pid = fork();
  if (pid < 0) throw std::runtime_error("run_command: fork() failed");

  if (pid == 0) {
    close(in_pipe[1]);
    close(out_pipe[0]);
    close(err_pipe[0]);
    child_exec(argv, options, in_pipe[0], out_pipe[1], err_pipe[1]);
  }

  close(in_pipe[0]);
  close(out_pipe[1]);
  close(err_pipe[1]);
  set_cloexec(in_pipe[1]);
  set_cloexec(out_pipe[0]);
  set_cloexec(err_pipe[0]);

  const std::string stdin_data = options.stdin_data.value_or("");
  std::size_t written = 0;
  if (stdin_data.empty()) {
    close(in_pipe[1]);
    in_pipe[1] = -1;
  }

  CommandResult result;
  struct Stream {
    int fd;
    std::string* sink;
  } streams[2] = {{out_pipe[0], &result.out}, {err_pipe[0], &result.err}};

  char buf[8192];
  bool out_open = true, err_open = true;
  while (out_open || err_open || in_pipe[1] >= 0) {
    pollfd fds[3];
    int nfds = 0;
    int out_idx = -1, err_idx = -1, in_idx = -1;
    if (out_open) {
      out_idx = nfds;
      fds[nfds++] = {streams[0].fd, POLLIN, 0};
    }
    if (err_open) {
      err_idx = nfds;
      fds[nfds++] = {streams[1].fd, POLLIN, 0};
    }
    if (in_pipe[1] >= 0) {
      in_idx = nfds;
      fds[nfds++] = {in_pipe[1], POLLOUT, 0};
    }
    if (poll(fds, nfds, -1) < 0) {
      if (errno == EINTR) continue;
      break;
    }
    if (out_idx >= 0 && (fds[out_idx].revents & (POLLIN | POLLHUP))) {
      ssize_t n = read(streams[0].fd, buf, sizeof buf);
      if (n > 0)
        result.out.append(buf, static_cast<std::size_t>(n));
      else
        out_open = false;
    }
    if (err_idx >= 0 && (fds[err_idx].revents & (POLLIN | POLLHUP))) {
      ssize_t n = read(streams[1].fd, buf, sizeof buf);
      if (n > 0)
        result.err.append(buf, static_cast<std::size_t>(n));
      else
        err_open = false;
    }
    if (in_idx >= 0 && (fds[in_idx].revents & (POLLOUT | POLLERR | POLLHUP))) {
      if (fds[in_idx].revents & (POLLERR | POLLHUP)) {
        close(in_pipe[1]);
        in_pipe[1] = -1;
      } else {
        ssize_t n = write(in_pipe[1], stdin_data.data() + written,
                          stdin_data.size() - written);
        if (n > 0) written += static_cast<std::size_t>(n);
        if (n < 0 || written == stdin_data.size()) {
          close(in_pipe[1]);
          in_pipe[1] = -1;
        }
      }
    }
  }
  close(out_pipe[0]);
  close(err_pipe[0]);
  if (in_pipe[1] >= 0) close(in_pipe[1]);

  int status = 0;
  if (waitpid(pid, &status, 0) < 0)
    throw std::runtime_error("run_command: waitpid() failed");
  if (WIFEXITED(status))
    result.exit_code = WEXITSTATUS(status);
  else if (WIFSIGNALED(status))
    result.exit_code = 128 + WTERMSIG(status);
  return result;
}

}  // namespace satdforge::util
